#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ssg/triple.hpp"

namespace ssg {

class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static ZMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  bool is_zero() const;

  ZMatrix transpose() const;
  ZMatrix operator*(const ZMatrix& o) const;
  ZMatrix operator+(const ZMatrix& o) const;
  ZMatrix scaled(long c) const;
  // copy m into the block whose top-left corner is (r, c)
  void place(const ZMatrix& m, std::size_t r, std::size_t c);

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long> a_;
};

// C(E0) x| G acting on pairs (y, h): v_g (y, h) = (gy, gh) and q_x (y, h) = [x = y] (y, h).
// The module M = sum over edges of q_d(e) A is realised as block columns: an element is a
// (|E1| D) x D matrix whose e-th block lies in q_d(e) A; operators on M are |E1| D square.
class CorrespondenceModel {
 public:
  explicit CorrespondenceModel(const Triple& t);

  std::size_t coefficient_dim() const { return dim_; }
  std::size_t module_dim() const { return ne_ * dim_; }

  const ZMatrix& q(VertexId x) const { return q_[x]; }
  const ZMatrix& v(std::size_t g) const { return v_[g]; }
  const ZMatrix& t(EdgeId e) const { return t_[e]; }
  const ZMatrix& V(std::size_t g) const { return V_[g]; }
  const ZMatrix& Q(VertexId x) const { return Q_[x]; }
  // identity operator of M
  const ZMatrix& P() const { return P_; }

  // module elements: right action and the A-valued inner product
  ZMatrix right(const ZMatrix& y, const ZMatrix& a) const { return y * a; }
  ZMatrix inner(const ZMatrix& y, const ZMatrix& z) const { return y.transpose() * z; }
  // rank one operator z -> y <w, z>
  ZMatrix theta(const ZMatrix& y, const ZMatrix& w) const { return y * w.transpose(); }
  // block column with a in block e
  ZMatrix column(EdgeId e, const ZMatrix& a) const;

  const Triple& source() const { return *src_; }
  bool has_sinks() const { return sinks_; }

 private:
  const Triple* src_;
  std::size_t nv_, ne_, ng_, dim_;
  std::vector<ZMatrix> q_, v_, t_, V_, Q_;
  ZMatrix P_;
  bool sinks_ = false;
};

struct RelationCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct CorrespondenceReport {
  std::vector<RelationCheck> checks;
  bool full = true;  // no sinks

  bool all_passed() const;
  const RelationCheck* first_failure() const;
};

// Checks every identity of the model; the cocycle relations read the action and
// cocycle from `against`, which must share the model's graph and group.
CorrespondenceReport verify_relations(const CorrespondenceModel& model, const Triple& against);
inline CorrespondenceReport verify_relations(const CorrespondenceModel& model) {
  return verify_relations(model, model.source());
}
// throws RelationFailed naming the first identity that fails
void require_relations(const CorrespondenceModel& model, const Triple& against);

}  // namespace ssg
