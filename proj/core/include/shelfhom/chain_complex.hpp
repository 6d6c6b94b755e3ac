#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shelfhom/distributive.hpp"
#include "shelfhom/smith.hpp"
#include "shelfhom/sparse_matrix.hpp"

namespace shelfhom {

/// Lexicographic index of a tuple over {0..n-1}, leftmost coordinate most significant.
std::size_t basis_index(std::span<const Element> tuple, std::size_t n);
std::vector<Element> index_tuple(std::size_t index, std::size_t n, std::size_t length);

/// n^k, or nullopt if it does not fit in size_t.
std::optional<std::size_t> checked_power(std::size_t n, std::size_t k);

/// One integer per op of a multi-shelf; the differential is sum_k c_k d^k.
struct CoefficientVector {
  std::vector<std::int64_t> values;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// Refuse complexes with n^(maxdeg+2) above this many basis elements unless overridden.
inline constexpr std::size_t kDefaultBasisCap = std::size_t{1} << 26;

/// Matrix of sum_k c_k sum_i (-1)^i d^k_{d,i} from C_d = Z[X^(d+1)] to C_{d-1}.
/// Degree 0 gives the augmentation row (1 x n of ones) when augmented, else a 0 x n matrix.
SparseIntMatrix boundary_matrix(const MultiShelf& ms, const CoefficientVector& c, int degree,
                                bool augmented);

/// Partial differential d_{d,i} of a single op (no sign).
SparseIntMatrix face_matrix(const BinaryOpTable& op, int degree, std::size_t face);

/// Integral homology of one degree: free rank plus invariant factors > 1.
struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Graded chain groups 0..max_degree with boundaries d_0..d_max_degree. Either the full
/// tuple basis X^(d+1) or, for degenerate quotients, the tuples without adjacent repeats.
class ChainComplex {
 public:
  std::size_t carrier_size() const noexcept { return n_; }
  int max_degree() const noexcept { return static_cast<int>(boundaries_.size()) - 1; }
  bool augmented() const noexcept { return augmented_; }
  bool is_quotient() const noexcept { return !basis_.empty(); }
  std::span<const BinaryOpTable> ops() const noexcept { return ops_; }
  const CoefficientVector& coefficients() const noexcept { return coefficients_; }

  /// Rank of C_d.
  std::size_t dimension(int degree) const;
  /// d_d : C_d -> C_{d-1}.
  const SparseIntMatrix& boundary(int degree) const;
  /// Tuple indices spanning C_d (identity list for full complexes).
  std::vector<std::size_t> basis(int degree) const;

 private:
  friend ChainComplex build_complex(const MultiShelf&, const CoefficientVector&, int, bool,
                                    std::size_t);
  friend ChainComplex quandle_quotient_complex(const Shelf&, const CoefficientVector&, int,
                                               bool, std::size_t);
  std::size_t n_ = 0;
  bool augmented_ = false;
  std::vector<BinaryOpTable> ops_;
  CoefficientVector coefficients_;
  std::vector<SparseIntMatrix> boundaries_;
  // Empty for full complexes; otherwise the kept tuple indices per degree.
  std::vector<std::vector<std::size_t>> basis_;
};

/// Builds C_0..C_maxdeg and verifies d_{d-1} d_d = 0 for every degree (DDNotZero otherwise).
/// Throws CapExceeded if n^(maxdeg+2) > cap.
ChainComplex build_complex(const MultiShelf& ms, const CoefficientVector& c, int maxdeg,
                           bool augmented, std::size_t cap = kDefaultBasisCap);

/// Needs d_{d+1}, so degree + 1 <= max_degree.
HomologyGroup homology(const ChainComplex& cx, int degree);

/// Degrees 0..max_degree-1, each boundary factored once; `jobs` bounds the worker count.
std::vector<HomologyGroup> homology_groups(const ChainComplex& cx, std::size_t jobs = 1);

enum class HomologyKind { Shelf, Rack, Quandle };

std::string to_string(HomologyKind kind);
HomologyKind parse_homology_kind(const std::string& name);

/// Augmented for shelf homology, not for rack or quandle homology.
bool default_augmentation(HomologyKind kind);

/// Groups in degrees 0..maxdeg, graded as in this library (degree n here is degree n+1
/// of the usual rack and quandle homology).
///   shelf:   op (*), coefficients (1)
///   rack:    ops (*, x*0y = x), coefficients (1, -1)
///   quandle: the rack differential on C / D, D spanned by tuples with an adjacent repeat
std::vector<HomologyGroup> preset_homology(const Shelf& shelf, HomologyKind kind, int maxdeg,
                                           std::optional<bool> augmented = std::nullopt,
                                           std::size_t cap = kDefaultBasisCap,
                                           std::size_t jobs = 1);

/// Ops (*) for a one-entry coefficient vector, (*, identity) for a two-entry one.
/// Requires a spindle (NotASpindle) and checks d(D) in D column by column before building
/// the quotient (DegenerateNotSubcomplex).
ChainComplex quandle_quotient_complex(const Shelf& spindle, const CoefficientVector& c,
                                      int maxdeg, bool augmented = false,
                                      std::size_t cap = kDefaultBasisCap);

/// True if the tuple has two equal adjacent entries.
bool is_degenerate(std::span<const Element> tuple);

}  // namespace shelfhom
