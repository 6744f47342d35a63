#include "ssg/correspondence.hpp"

#include "ssg/errors.hpp"

namespace ssg {

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ZMatrix::is_zero() const {
  for (long v : a_)
    if (v) return false;
  return true;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix shapes do not match");
  ZMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const long a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

ZMatrix ZMatrix::operator+(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shapes do not match");
  ZMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

ZMatrix ZMatrix::scaled(long c) const {
  ZMatrix m = *this;
  for (auto& v : m.a_) v *= c;
  return m;
}

void ZMatrix::place(const ZMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r + i, c + j) = m(i, j);
}

CorrespondenceModel::CorrespondenceModel(const Triple& t) : src_(&t) {
  if (!t.is_finite()) throw Error(ErrorKind::UnsupportedBackend, "the correspondence model needs a finite group");
  const Graph& E = t.graph();
  const Group& G = t.group();
  nv_ = E.num_vertices();
  ne_ = E.num_edges();
  ng_ = G.order();
  dim_ = nv_ * ng_;
  auto idx = [&](VertexId y, std::size_t h) { return y * ng_ + h; };
  for (VertexId x = 0; x < nv_; ++x) {
    ZMatrix m(dim_, dim_);
    for (std::size_t h = 0; h < ng_; ++h) m(idx(x, h), idx(x, h)) = 1;
    q_.push_back(m);
  }
  for (std::size_t g = 0; g < ng_; ++g) {
    ZMatrix m(dim_, dim_);
    for (VertexId y = 0; y < nv_; ++y)
      for (std::size_t h = 0; h < ng_; ++h) {
        const Elem ge = g;
        const VertexId gy = t.act(ge, y);
        const std::size_t gh = G.index(G.mul(ge, Elem(static_cast<unsigned long>(h))));
        m(idx(gy, gh), idx(y, h)) = 1;
      }
    v_.push_back(m);
  }
  for (EdgeId e = 0; e < ne_; ++e) t_.push_back(column(e, q_[E.domain(e)]));
  const std::size_t md = module_dim();
  for (std::size_t g = 0; g < ng_; ++g) {
    ZMatrix m(md, md);
    const Elem ge = g;
    for (EdgeId e = 0; e < ne_; ++e) {
      const std::size_t phi = G.index(t.phi(ge, e));
      m.place(v_[phi] * q_[E.domain(e)], t.act_edge(ge, e) * dim_, e * dim_);
    }
    V_.push_back(m);
  }
  for (VertexId x = 0; x < nv_; ++x) {
    ZMatrix m(md, md);
    for (EdgeId e = 0; e < ne_; ++e)
      if (E.range(e) == x) m.place(q_[E.domain(e)], e * dim_, e * dim_);
    Q_.push_back(m);
  }
  P_ = ZMatrix(md, md);
  for (EdgeId e = 0; e < ne_; ++e) P_.place(q_[E.domain(e)], e * dim_, e * dim_);
  for (VertexId x = 0; x < nv_; ++x) sinks_ = sinks_ || E.out_of(x).empty();
}

ZMatrix CorrespondenceModel::column(EdgeId e, const ZMatrix& a) const {
  ZMatrix m(module_dim(), dim_);
  m.place(a, e * dim_, 0);
  return m;
}

bool CorrespondenceReport::all_passed() const { return first_failure() == nullptr; }

const RelationCheck* CorrespondenceReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

CorrespondenceReport verify_relations(const CorrespondenceModel& M, const Triple& against) {
  const Triple& t = M.source();
  const Graph& E = t.graph();
  const Group& G = t.group();
  if (!against.is_finite() || against.group().order() != G.order() || against.graph().num_edges() != E.num_edges() ||
      against.graph().num_vertices() != E.num_vertices())
    throw Error(ErrorKind::InvalidArgument, "checked triple does not match the model's graph and group");
  const std::size_t ng = G.order();
  const std::size_t nv = E.num_vertices();
  const std::size_t ne = E.num_edges();
  auto gname = [&](std::size_t g) { return G.names()[g]; };
  auto elem = [](std::size_t g) { return Elem(static_cast<unsigned long>(g)); };

  CorrespondenceReport rep;
  auto check = [&](const std::string& name, auto&& body) {
    RelationCheck c{name, true, {}};
    body(c);
    rep.checks.push_back(std::move(c));
  };
  auto fail = [](RelationCheck& c, const std::string& w) {
    if (c.passed) c.witness = w;
    c.passed = false;
  };

  check("v_g q_x = q_gx v_g", [&](RelationCheck& c) {
    for (std::size_t g = 0; g < ng; ++g)
      for (VertexId x = 0; x < nv; ++x)
        if (M.v(g) * M.q(x) != M.q(t.act(elem(g), x)) * M.v(g)) fail(c, "g=" + gname(g) + ", x=" + E.vertex_name(x));
  });
  check("v is a unitary representation", [&](RelationCheck& c) {
    const auto I = ZMatrix::identity(M.coefficient_dim());
    for (std::size_t g = 0; g < ng; ++g) {
      if (M.v(g) * M.v(g).transpose() != I) fail(c, "v_" + gname(g) + " is not unitary");
      for (std::size_t h = 0; h < ng; ++h)
        if (M.v(g) * M.v(h) != M.v(G.index(G.mul(elem(g), elem(h))))) fail(c, "g=" + gname(g) + ", h=" + gname(h));
    }
  });
  check("t_e q_d(e) = t_e", [&](RelationCheck& c) {
    for (EdgeId e = 0; e < ne; ++e)
      if (M.right(M.t(e), M.q(E.domain(e))) != M.t(e)) fail(c, "e=" + E.edge_name(e));
  });
  check("V_g unitary with V_g V_h = V_gh", [&](RelationCheck& c) {
    for (std::size_t g = 0; g < ng; ++g) {
      const auto& V = M.V(g);
      if (V * V.transpose() != M.P() || V.transpose() * V != M.P()) fail(c, "V_" + gname(g) + " is not unitary");
      if (V.transpose() != M.V(G.index(G.inv(elem(g))))) fail(c, "V_" + gname(g) + "* differs from V of the inverse");
      for (std::size_t h = 0; h < ng; ++h)
        if (V * M.V(h) != M.V(G.index(G.mul(elem(g), elem(h))))) fail(c, "g=" + gname(g) + ", h=" + gname(h));
    }
  });
  check("<V_g y, V_g z> = <y, z>", [&](RelationCheck& c) {
    for (std::size_t g = 0; g < ng; ++g)
      for (EdgeId e = 0; e < ne; ++e)
        for (EdgeId f = 0; f < ne; ++f) {
          const auto y = M.right(M.t(e), M.v(0) + M.v(g));
          const auto z = M.t(f);
          if (M.inner(M.V(g) * y, M.V(g) * z) != M.inner(y, z))
            fail(c, "g=" + gname(g) + ", e=" + E.edge_name(e) + ", f=" + E.edge_name(f));
        }
  });
  check("V_g Q_x = Q_gx V_g", [&](RelationCheck& c) {
    for (std::size_t g = 0; g < ng; ++g)
      for (VertexId x = 0; x < nv; ++x)
        if (M.V(g) * M.Q(x) != M.Q(t.act(elem(g), x)) * M.V(g)) fail(c, "g=" + gname(g) + ", x=" + E.vertex_name(x));
  });
  check("Q_x orthogonal projections summing to 1", [&](RelationCheck& c) {
    ZMatrix sum(M.module_dim(), M.module_dim());
    for (VertexId x = 0; x < nv; ++x) {
      sum = sum + M.Q(x);
      if (M.Q(x).transpose() != M.Q(x)) fail(c, "Q_" + E.vertex_name(x) + " is not self adjoint");
      for (VertexId y = 0; y < nv; ++y)
        if (M.Q(x) * M.Q(y) != (x == y ? M.Q(x) : ZMatrix(M.module_dim(), M.module_dim())))
          fail(c, "x=" + E.vertex_name(x) + ", y=" + E.vertex_name(y));
    }
    if (sum != M.P()) fail(c, "sum of Q_x is not the identity");
  });
  check("v_g t_e = t_ge v_phi(g,e)", [&](RelationCheck& c) {
    for (std::size_t g = 0; g < ng; ++g)
      for (EdgeId e = 0; e < ne; ++e) {
        const EdgeId ge = against.act_edge(elem(g), e);
        const auto phi = against.group().index(against.phi(elem(g), e));
        if (M.V(g) * M.t(e) != M.right(M.t(ge), M.v(phi)))
          fail(c, "g=" + gname(g) + ", e=" + E.edge_name(e));
      }
  });
  check("q_x v_g t_e = [r(ge) = x] t_ge v_phi(g,e)", [&](RelationCheck& c) {
    for (VertexId x = 0; x < nv; ++x)
      for (std::size_t g = 0; g < ng; ++g)
        for (EdgeId e = 0; e < ne; ++e) {
          const EdgeId ge = against.act_edge(elem(g), e);
          const auto phi = against.group().index(against.phi(elem(g), e));
          auto rhs = M.right(M.t(ge), M.v(phi));
          if (E.range(ge) != x) rhs = rhs.scaled(0);
          if (M.Q(x) * M.V(g) * M.t(e) != rhs)
            fail(c, "x=" + E.vertex_name(x) + ", g=" + gname(g) + ", e=" + E.edge_name(e));
        }
  });
  check("<t_e, t_e> = q_d(e)", [&](RelationCheck& c) {
    for (EdgeId e = 0; e < ne; ++e)
      if (M.inner(M.t(e), M.t(e)) != M.q(E.domain(e))) fail(c, "e=" + E.edge_name(e));
  });
  check("Q_x = sum over r(e) = x of t_e t_e*", [&](RelationCheck& c) {
    for (VertexId x = 0; x < nv; ++x) {
      ZMatrix sum(M.module_dim(), M.module_dim());
      for (EdgeId e : E.into(x)) sum = sum + M.theta(M.t(e), M.t(e));
      if (sum != M.Q(x)) fail(c, "x=" + E.vertex_name(x));
    }
  });
  check("sum over all edges of t_e t_e* = 1", [&](RelationCheck& c) {
    ZMatrix sum(M.module_dim(), M.module_dim());
    for (EdgeId e = 0; e < ne; ++e) sum = sum + M.theta(M.t(e), M.t(e));
    if (sum != M.P()) fail(c, "the range projections do not add up to the identity");
  });
  check("Cuntz-Krieger family with covariant unitaries", [&](RelationCheck& c) {
    const std::size_t md = M.module_dim();
    for (EdgeId e = 0; e < ne; ++e) {
      const auto te = M.theta(M.t(e), M.t(e));
      for (EdgeId f = 0; f < ne; ++f) {
        const auto tf = M.theta(M.t(f), M.t(f));
        if (te * tf != (e == f ? te : ZMatrix(md, md)))
          fail(c, "t_" + E.edge_name(e) + " t_" + E.edge_name(e) + "* and t_" + E.edge_name(f) + " t_" + E.edge_name(f) + "* are not orthogonal projections");
      }
      for (std::size_t g = 0; g < ng; ++g) {
        const EdgeId ge = against.act_edge(elem(g), e);
        if (M.V(g) * te * M.V(g).transpose() != M.theta(M.t(ge), M.t(ge)))
          fail(c, "u_g s_e s_e* u_g* != s_ge s_ge* at g=" + gname(g) + ", e=" + E.edge_name(e));
      }
    }
    for (std::size_t g = 0; g < ng; ++g)
      for (VertexId x = 0; x < nv; ++x)
        if (M.V(g) * M.Q(x) * M.V(g).transpose() != M.Q(t.act(elem(g), x)))
          fail(c, "u_g p_x u_g* != p_gx at g=" + gname(g) + ", x=" + E.vertex_name(x));
  });
  rep.full = !M.has_sinks();
  return rep;
}

void require_relations(const CorrespondenceModel& model, const Triple& against) {
  const auto rep = verify_relations(model, against);
  if (const auto* f = rep.first_failure()) throw Error(ErrorKind::RelationFailed, f->name + " (" + f->witness + ")");
}

}  // namespace ssg
