#pragma once

#include <string_view>

namespace ssg {

enum class Truth { No, Yes, Unknown };

inline Truth truth(bool b) { return b ? Truth::Yes : Truth::No; }

inline std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::No: return "NO";
    case Truth::Yes: return "YES";
    default: return "UNKNOWN";
  }
}

// Conjunction in the three-valued sense: any NO wins, then any UNKNOWN.
inline Truth operator&&(Truth a, Truth b) {
  if (a == Truth::No || b == Truth::No) return Truth::No;
  if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
  return Truth::Yes;
}

}  // namespace ssg
