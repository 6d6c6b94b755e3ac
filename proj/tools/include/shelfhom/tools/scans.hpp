#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shelfhom/tools/io.hpp"

namespace shelfhom::tools {

enum class Verdict { Consistent, Inconsistent, NotComputed };

std::string to_string(Verdict v);

/// One grid point of a scan. Inconsistent points always carry both `observed` and
/// `conjectured`.
struct ScanPoint {
  json parameters;
  std::vector<HomologyGroup> observed;
  std::optional<std::int64_t> conjectured;
  Verdict verdict = Verdict::NotComputed;
  /// Marks points of interest: exceptional coefficient vectors, failures of injectivity, ...
  bool flagged = false;
  json details;
};

struct ScanReport {
  std::string target;
  json grid;
  std::vector<ScanPoint> points;
  json summary;
};

json to_json(const ScanReport& r);

struct ScanOptions {
  std::size_t cap = kDefaultBasisCap;
  std::size_t jobs = 1;
};

inline constexpr std::size_t kScanSizeLimit = 4;
inline constexpr std::size_t kBooleanOmegaLimit = 2;
inline constexpr std::size_t kHyperplaneSampleLimit = 10000;

/// rk H_{k+1} = |X| rk H_k for k >= |X| - 2, over every class of size 1..max_size, using
/// shelf homology in degrees 0..max_degree.
ScanReport scan_growth(std::size_t max_size, int max_degree, const ScanOptions& opts = {});

/// rk H_d = |X|^(d-1) (2 + (|X|+1)(r-2)) for d >= 1 over the pointed-map shelves
/// (b*y = g(y), x*y = y otherwise, g^-1(b) = {b}) of the given size, up to isomorphism.
ScanReport scan_example4(std::size_t size, int max_degree, const ScanOptions& opts = {});

/// The Boolean multi-shelf on 2^Omega with ops (x*y = x, intersection, union) and
/// differential a0 d^0 + a1 d^1 + a2 d^2 for every (a0, a1, a2) in grid^3.
ScanReport scan_boolean(std::size_t omega, const std::vector<std::int64_t>& grid, int max_degree,
                        bool augmented = true, const ScanOptions& opts = {});

/// Samples coefficient vectors uniformly from [-range, range]^N, records the rank sequence
/// of each, and flags those differing from the most common (generic) sequence.
ScanReport scan_hyperplane(const MultiShelf& ms, std::size_t samples, std::int64_t range,
                           std::uint64_t seed, int max_degree, bool augmented = true,
                           const ScanOptions& opts = {});

/// Every class of size n whose shelf homology in degrees 0..max_degree has torsion, with a
/// note on whether it is a pointed-map shelf.
ScanReport torsion_hunt(std::size_t n, int max_degree, const ScanOptions& opts = {});

inline constexpr int kOrbitProjectionDegreeLimit = 3;

/// pi_* : H_d(X) -> H_d(O) for the projection onto left orbits, over every class of size
/// 1..max_size and d = 1..max_degree (augmented shelf homology). Injectivity is judged by
/// rational rank, surjectivity over the integers. Each point observes (H_d(X), H_d(O)).
ScanReport scan_orbit_projection(std::size_t max_size, int max_degree = 1,
                                 const ScanOptions& opts = {});

/// Some b has b*y = g(y) with g^-1(b) = {b}, and x*y = y for every x != b.
bool is_pointed_map_shelf(const BinaryOpTable& t);

/// Conjectured ranks; exposed for tests.
std::int64_t boolean_conjectured_rank(std::size_t omega, std::int64_t a0, std::int64_t a1,
                                      std::int64_t a2, int degree);
std::int64_t example4_conjectured_rank(std::size_t size, std::size_t orbits, int degree);

}  // namespace shelfhom::tools
