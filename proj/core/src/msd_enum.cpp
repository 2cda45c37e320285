#include "stratadiv/msd_enum.hpp"

#include <numeric>
#include <sstream>

#include "stratadiv/errors.hpp"

namespace stratadiv {

std::int64_t prong_classes(const std::vector<int>& prongs) {
    if (prongs.empty()) throw InputError("prong_classes: empty list");
    std::int64_t g = 0;
    for (int k : prongs) {
        if (k < 1) throw InputError("prong_classes: prong numbers are positive");
        g = std::gcd(g, static_cast<std::int64_t>(k));
    }
    return g;
}

std::int64_t local_degree(const std::vector<int>& node_params) {
    if (node_params.size() != 2)
        throw InputError("local_degree: exactly two nodes expected");
    for (int a : node_params)
        if (a < 1) throw InputError("local_degree: node parameters are positive");
    return node_params[0] + node_params[1];
}

std::int64_t config_count(const BoundaryConfig& c) {
    if (c.twisted < 1) throw InputError("config_count: twisted count must be positive");
    if (c.symmetry < 1) throw InputError("config_count: symmetry order must be positive");
    const std::int64_t classes = c.prong_class_override
                                     ? *c.prong_class_override
                                     : prong_classes(c.prong_numbers);
    const std::int64_t deg = c.irreducible ? 1 : local_degree(c.node_params);
    const std::int64_t numerator = c.twisted * classes * deg;
    if (numerator % c.symmetry != 0)
        throw ModelError("config_count: non-integral total for " + c.table + " " +
                         c.label + " (" + c.citation + ")");
    return numerator / c.symmetry;
}

CountReport table_total(const std::vector<BoundaryConfig>& configs) {
    CountReport rep;
    for (const auto& c : configs) {
        const std::int64_t n = config_count(c);
        rep.entries.push_back({c.table + " " + c.label, n, c.citation});
        rep.total += n;
    }
    return rep;
}

std::string_view embedded_tables_text() {
    // Boundary tables for the three genus-1 second-kind loci, v1.
    // One record per line: key=value pairs, lists comma-separated.
    // irreducible records have local degree 1 and state their single
    // prong-matching class directly.
    static constexpr std::string_view text = R"(# boundary degeneration tables, v1
table=4-22 col=1 twisted=1 classes=1 irreducible=1 sym=1 cite="table (4;-2,-2), irreducible column"
table=4-22 col=2 twisted=1 prongs=1,1 params=1,1 sym=1 cite="table (4;-2,-2), pole on top"
table=4-22 col=3 twisted=1 prongs=2,2 params=1,1 sym=2 cite="table (4;-2,-2), both poles on top"
table=5-32 col=1 twisted=4 classes=1 irreducible=1 sym=1 cite="table (5;-3,-2), irreducible column"
table=5-32 col=2 twisted=2 prongs=1,1 params=1,1 sym=1 cite="table (5;-3,-2), order-2 pole on top"
table=5-32 col=3 twisted=2 prongs=1,2 params=2,1 sym=1 cite="table (5;-3,-2), order-3 pole on top; two node assignments"
table=5-32 col=4 twisted=2 prongs=3,2 params=2,3 sym=1 cite="table (5;-3,-2), both poles on top; two node assignments"
table=6-222 col=1 twisted=1 classes=1 irreducible=1 sym=1 cite="table (6;-2,-2,-2), irreducible column"
table=6-222 col=2 twisted=1 prongs=1,1 params=1,1 sym=1 cite="table (6;-2,-2,-2), one pole on top"
table=6-222 col=3 twisted=1 prongs=2,2 params=1,1 sym=2 cite="table (6;-2,-2,-2), two poles on top"
table=6-222 col=4 twisted=1 classes=3 params=1,1 sym=3 cite="table (6;-2,-2,-2), all poles on top; 3 stated prong classes"
)";
    return text;
}

namespace {

std::vector<int> parse_list(const std::string& v) {
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

std::vector<BoundaryConfig> parse_tables(std::string_view text) {
    std::vector<BoundaryConfig> out;
    std::stringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        BoundaryConfig c;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && line[pos] == ' ') ++pos;
            if (pos >= line.size()) break;
            const auto eq = line.find('=', pos);
            if (eq == std::string::npos)
                throw InputError("table data: expected key=value in: " + line);
            const std::string key = line.substr(pos, eq - pos);
            std::string value;
            if (eq + 1 < line.size() && line[eq + 1] == '"') {
                const auto close = line.find('"', eq + 2);
                if (close == std::string::npos)
                    throw InputError("table data: unterminated quote in: " + line);
                value = line.substr(eq + 2, close - eq - 2);
                pos = close + 1;
            } else {
                auto end = line.find(' ', eq + 1);
                if (end == std::string::npos) end = line.size();
                value = line.substr(eq + 1, end - eq - 1);
                pos = end;
            }
            if (key == "table") c.table = value;
            else if (key == "col") c.label = "col " + value;
            else if (key == "twisted") c.twisted = std::stoll(value);
            else if (key == "prongs") c.prong_numbers = parse_list(value);
            else if (key == "classes") c.prong_class_override = std::stoi(value);
            else if (key == "params") c.node_params = parse_list(value);
            else if (key == "irreducible") c.irreducible = value != "0";
            else if (key == "sym") c.symmetry = std::stoll(value);
            else if (key == "cite") c.citation = value;
            else throw InputError("table data: unknown key '" + key + "'");
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BoundaryConfig> shipped_table(std::string_view id) {
    std::vector<BoundaryConfig> out;
    for (auto& c : parse_tables(embedded_tables_text()))
        if (c.table == id) out.push_back(std::move(c));
    if (out.empty())
        throw InputError("unknown table '" + std::string(id) +
                         "'; shipped tables: 4-22, 5-32, 6-222");
    return out;
}

std::int64_t degree_g2_one_zero(std::int64_t a) {
    if (a < 2) throw InputError("degree_g2_one_zero: requires a >= 2");
    return 2 * (a + 2) * (a + 2) * a * a - 18;
}

std::int64_t degree_g1_second_kind(std::int64_t a) {
    if (a < 2) throw InputError("degree_g1_second_kind: requires a >= 2");
    if (a == 2) return 5; // both poles of the same order: extra symmetry
    return (a + 2) * (a + 2) + a * a - 10;
}

SecondKind622 degree_g2_second_kind_622() {
    SecondKind622 r;
    // Zero and all poles split across the two elliptic components; the
    // overall factor 2 swaps the components.
    const std::int64_t deg_6222 = table_total(shipped_table("6-222")).total; // 7
    const std::int64_t deg_422 = table_total(shipped_table("4-22")).total;   // 5
    r.d_a = deg_6222 * 3;                  // 3 ways to choose the glued pole
    r.d_b = degree_g1_second_kind(4) * 3;  // 42 * |Omega_1(2;-2)|
    r.d_c = 35 * deg_422;                  // |Omega_1(6;-6)| = 6^2 - 1
    r.total = 2 * (r.d_a + r.d_b + r.d_c);
    return r;
}

std::int64_t dim_projection_second_kind(int g, int n) {
    if (g < 1) throw InputError("dim_projection_second_kind: requires g >= 1");
    if (n < 1) throw InputError("dim_projection_second_kind: requires n >= 1");
    if (g == 1) return 1;
    return std::min<std::int64_t>(3 * g - 3, 2 * g + n - 2);
}

IntersectionReport intersection_with_A() {
    IntersectionReport rep;
    rep.cases.entries = {
        {"case (a)", 0, "pole would be one of finitely many points on a generic curve"},
        {"case (b)", 0, "zero would be one of finitely many points on a generic curve"},
        {"case (c)", 0, "node would be a Weierstrass point, impossible at a generic point"},
        {"case (d)", 0, "second-kind locus has codimension too high through a generic point"},
    };
    rep.cases.total = 0;
    rep.total = 0;
    return rep;
}

IntersectionReport intersection_with_C() {
    IntersectionReport rep;
    const std::int64_t da = 35 * degree_g2_one_zero(2);       // 35 * 110
    const std::int64_t db = 3 * degree_g2_one_zero(4);        // 3 * 1134
    const std::int64_t dc = 6 * degree_g1_second_kind(4);     // 6 Weierstrass points * 42
    const std::int64_t dd = 2 * degree_g2_second_kind_622().total; // 2 pole choices * 644
    rep.cases.entries = {
        {"case (a)", da, "zero on the elliptic tail, pole on the genus-2 part"},
        {"case (b)", db, "pole on the elliptic tail, zero on the genus-2 part"},
        {"case (c)", dc, "both points on the elliptic tail"},
        {"case (d)", dd, "both points on the genus-2 part"},
    };
    for (const auto& e : rep.cases.entries) rep.cases.total += e.count;
    rep.total = rep.cases.total;
    return rep;
}

} // namespace stratadiv
