#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stratadiv {

/// One column of the boundary-degeneration tables: everything needed to
/// count the smooth differentials degenerating to multi-scale differentials
/// on one pointed-curve topology.
struct BoundaryConfig {
    std::string table;   // "4-22", "5-32", "6-222"
    std::string label;   // column label, e.g. "col 3"
    std::int64_t twisted = 0;          // # twisted differentials (cited constant)
    std::vector<int> prong_numbers;    // kappa_i per node (two-level cases)
    std::optional<int> prong_class_override; // when the table states it directly
    std::vector<int> node_params;      // a_i = lcm(kappa)/kappa_i
    bool irreducible = false;          // one-node, simple-polar column: local degree 1
    std::int64_t symmetry = 1;         // order of the marked-point symmetry group
    std::string citation;
};

struct CountReport {
    struct Entry {
        std::string label;
        std::int64_t count = 0;
        std::string citation;
    };
    std::vector<Entry> entries;
    std::int64_t total = 0;
};

/// gcd of the prong numbers: the number of prong-matching classes of a
/// two-level degeneration.
std::int64_t prong_classes(const std::vector<int>& prongs);

/// a_1 + a_2: the degree of the one-exceptional-component family over its
/// image. Exactly two nodes.
std::int64_t local_degree(const std::vector<int>& node_params);

/// twisted * prong_classes * local_degree / symmetry. A non-integral
/// quotient means a mis-entered record and raises ModelError.
std::int64_t config_count(const BoundaryConfig& c);

CountReport table_total(const std::vector<BoundaryConfig>& configs);

/// The shipped table dataset, one record per line, diffable against the
/// source tables.
std::string_view embedded_tables_text();

std::vector<BoundaryConfig> parse_tables(std::string_view text);

/// Records of one shipped table ("4-22", "5-32" or "6-222").
std::vector<BoundaryConfig> shipped_table(std::string_view id);

/// Degree of the cover P-Omega_2(a+2;-a) -> M_2: 2(a+2)^2 a^2 - 18, a >= 2.
std::int64_t degree_g2_one_zero(std::int64_t a);

/// Degree of the genus-1 second-kind cover for type (a+2;-a,-2):
/// (a+2)^2 + a^2 - 10 for a >= 3, and 5 for the symmetric case a = 2.
std::int64_t degree_g1_second_kind(std::int64_t a);

struct SecondKind622 {
    std::int64_t d_a = 0; // zero with all poles on the far component
    std::int64_t d_b = 0;
    std::int64_t d_c = 0;
    std::int64_t total = 0; // 2 * (d_a + d_b + d_c)
};

/// Degree 644 of the genus-2 second-kind cover for type (6;-2,-2),
/// composed from the shipped tables and closed forms.
SecondKind622 degree_g2_second_kind_622();

/// Dimension of the projection of the second-kind locus to M_g:
/// 1 for g = 1, min(3g-3, 2g+n-2) for g >= 2. Callers guarantee p >= 2
/// and all pole orders >= 2.
std::int64_t dim_projection_second_kind(int g, int n);

struct IntersectionReport {
    CountReport cases;
    std::int64_t total = 0;
};

/// Intersection with the test curve A: 0, with the four impossible
/// degeneration cases as the citation trail.
IntersectionReport intersection_with_A();

/// Intersection with the test curve C: 3850 + 3402 + 252 + 1288 = 8792.
IntersectionReport intersection_with_C();

} // namespace stratadiv
