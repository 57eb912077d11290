#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct DominanceError : Error { using Error::Error; };
struct NotACharacterError : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };
struct UnsupportedShapeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

enum class Family { W, S, H, CH };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::S: return "S";
    case Family::H: return "H";
    case Family::CH: return "CH";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "W") return Family::W;
  if (s == "S" || s == "Sbar") return Family::S;
  if (s == "H" || s == "Hbar") return Family::H;
  if (s == "CH" || s == "CHbar") return Family::CH;
  throw ParseError("unknown family '" + s + "'");
}

// Family plus rank. For the Hamiltonian families r = n/2 and weights carry a delta slot.
struct AlgebraSpec {
  Family family = Family::W;
  int n = 3;

  AlgebraSpec() = default;
  AlgebraSpec(Family f, int rank) : family(f), n(rank) { validate(); }

  bool hamiltonian() const { return family == Family::H || family == Family::CH; }
  bool witt_like() const { return !hamiltonian(); }
  int r() const { return n / 2; }
  bool odd() const { return n % 2 == 1; }
  int eps_dim() const { return hamiltonian() ? r() : n; }
  bool has_delta() const { return hamiltonian(); }
  int coord_dim() const { return eps_dim() + (has_delta() ? 1 : 0); }

  // top Z-degree of the algebra
  int top_degree() const {
    switch (family) {
      case Family::W: return n - 1;
      case Family::S: return n - 2;
      case Family::H: return n - 3;
      case Family::CH: return n - 2;
    }
    return 0;
  }

  void validate() const {
    int lo = hamiltonian() ? 5 : 3;
    if (n < lo) throw RankError(name() + ": rank below supported range (n >= " + std::to_string(lo) + ")");
    if (n > 9) throw RankError(name() + ": rank above supported range (n <= 9)");
  }

  std::string name() const { return family_name(family) + "(" + std::to_string(n) + ")"; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.family == b.family && a.n == b.n; }
};

}  // namespace cartan
