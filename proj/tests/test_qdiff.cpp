#include "doctest.h"

#include "qheun/errors.hpp"
#include "qheun/parser.hpp"
#include "qheun/qdiff.hpp"

#include <string>
#include <vector>

using namespace qheun;

namespace {

// Figure patterns: rows 0,1,2 separated by '/', each row lists M, Z, P.
// F = nonzero, O = zero, A = either.
struct Figure {
    const char* name;
    const char* pattern;
    TaxClass cls;
    const char* variant;
    Reduction red;
};

constexpr auto NA = Reduction::NotApplicable;
constexpr auto NR = Reduction::NonReduced;
constexpr auto SR = Reduction::SinglyReduced;
constexpr auto DR = Reduction::DoublyReduced;

const std::vector<Figure> class_figures = {
    {"q-Heun", "FAF/AAA/FAF", TaxClass::QHeun, "", NA},
    {"hypergeometric pair, first", "FAF/AAO/FOO", TaxClass::Unclassified, "", NA},
    {"hypergeometric pair, second", "FAF/FAF/OOO", TaxClass::HypergeometricType, "", NA},

    {"cqHE", "FAF/AAF/FFO", TaxClass::Confluent, "cqHE", NR},
    {"cqHE2", "FAF/FAA/OFF", TaxClass::Confluent, "cqHE2", NR},
    {"cqHE3", "OFF/FAA/FAF", TaxClass::Confluent, "cqHE3", NR},
    {"cqHE4", "FFO/AAF/FAF", TaxClass::Confluent, "cqHE4", NR},
    {"reduced cqHE", "FAF/AAF/FOO", TaxClass::Confluent, "cqHE", SR},
    {"reduced cqHE2", "FAF/FAA/OOF", TaxClass::Confluent, "cqHE2", SR},
    {"reduced cqHE3", "OOF/FAA/FAF", TaxClass::Confluent, "cqHE3", SR},
    {"reduced cqHE4", "FOO/AAF/FAF", TaxClass::Confluent, "cqHE4", SR},

    {"bqHE", "FAF/AAO/FFO", TaxClass::Biconfluent, "bqHE", NA},
    {"bqHE2", "FAF/OAA/OFF", TaxClass::Biconfluent, "bqHE2", NA},
    {"bqHE3", "OFF/OAA/FAF", TaxClass::Biconfluent, "bqHE3", NA},
    {"bqHE4", "FFO/AAO/FAF", TaxClass::Biconfluent, "bqHE4", NA},
    {"bqHE5", "FAF/FAF/OFO", TaxClass::Biconfluent, "bqHE5", NA},
    {"bqHE6", "OFO/FAF/FAF", TaxClass::Biconfluent, "bqHE6", NA},

    {"dqHE", "FFO/AAF/FFO", TaxClass::DoublyConfluent, "dqHE", NR},
    {"dqHE2", "OFF/FAA/OFF", TaxClass::DoublyConfluent, "dqHE2", NR},
    {"dqHE3", "OFF/FAF/FFO", TaxClass::DoublyConfluent, "dqHE3", NR},
    {"dqHE4", "FFO/FAF/OFF", TaxClass::DoublyConfluent, "dqHE4", NR},
    {"dqHE, no top Z", "FFO/AAF/FOO", TaxClass::DoublyConfluent, "dqHE", SR},
    {"dqHE, no bottom Z", "FOO/AAF/FFO", TaxClass::DoublyConfluent, "dqHE", SR},
    {"dqHE, no outer Z", "FOO/AAF/FOO", TaxClass::DoublyConfluent, "dqHE", DR},
    {"dqHE4, no top Z", "FFO/FAF/OOF", TaxClass::DoublyConfluent, "dqHE4", SR},
    {"dqHE4, no bottom Z", "FOO/FAF/OFF", TaxClass::DoublyConfluent, "dqHE4", SR},
    {"dqHE4, no outer Z", "FOO/FAF/OOF", TaxClass::DoublyConfluent, "dqHE4", DR},
    // Reduced dqHE2 and dqHE3 have no drawing; patterns follow the same rule.
    {"dqHE2, no bottom Z", "OOF/FAA/OFF", TaxClass::DoublyConfluent, "dqHE2", SR},
    {"dqHE2, no top Z", "OFF/FAA/OOF", TaxClass::DoublyConfluent, "dqHE2", SR},
    {"dqHE2, no outer Z", "OOF/FAA/OOF", TaxClass::DoublyConfluent, "dqHE2", DR},
    {"dqHE3, no bottom Z", "OOF/FAF/FFO", TaxClass::DoublyConfluent, "dqHE3", SR},
    {"dqHE3, no top Z", "OFF/FAF/FOO", TaxClass::DoublyConfluent, "dqHE3", SR},
    {"dqHE3, no outer Z", "OOF/FAF/FOO", TaxClass::DoublyConfluent, "dqHE3", DR},
};

// Supports of the catalog equations.
const std::vector<Figure> catalog_figures = {
    {"A4", "FFF/FFF/FFO", TaxClass::Confluent, "cqHE", NR},
    {"A5", "OFF/FFF/FFO", TaxClass::DoublyConfluent, "dqHE3", NR},
    {"A5#", "OFF/FFF/FFO", TaxClass::DoublyConfluent, "dqHE3", NR},
    {"A6", "OFF/OFF/FFO", TaxClass::Unclassified, "", NA},
    {"A6#", "OFF/OFF/FFO", TaxClass::Unclassified, "", NA},
    {"A7", "OFO/OFF/FFO", TaxClass::Unclassified, "", NA},
    {"A7'", "OFF/OFO/FFO", TaxClass::Unclassified, "", NA},
    {"A4w", "FFF/FFF/OFF", TaxClass::Confluent, "cqHE2", NR},
    {"E3a", "FFF/OFF/OFF", TaxClass::Biconfluent, "bqHE2", NA},
    {"E2a", "FFO/OFF/OFF", TaxClass::Unclassified, "", NA},
    {"A1w", "FOO/FFF/OOF", TaxClass::DoublyConfluent, "dqHE4", DR},
    {"E3b", "FFO/FFF/OFF", TaxClass::DoublyConfluent, "dqHE4", NR},
    {"E2b", "FOO/FFF/OFF", TaxClass::DoublyConfluent, "dqHE4", SR},
    {"A1w8", "FOO/OFF/OFF", TaxClass::Unclassified, "", NA},
};

const char* col_name[] = {"M", "Z", "P"};

// Coefficient for (column, row): a distinct nonconstant RatFun.
RatFun coefficient(int col, int row) {
    std::string v = std::string("c") + col_name[col] + std::to_string(row);
    return parse_expr("(" + v + " + q)/(1 - t*" + v + ")");
}

QDiffEq build(const std::string& pattern, unsigned mask, std::set<std::pair<int, int>>& support) {
    std::vector<RatFun> c[3];
    for (auto& v : c) v.assign(3, RatFun(0));
    support.clear();
    unsigned bit = 0;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            char ch = pattern[4 * row + col];
            bool on = ch == 'F' || (ch == 'A' && ((mask >> bit++) & 1));
            if (on) {
                c[col][row] = coefficient(col, row);
                support.insert({col, row});
            }
        }
    return QDiffEq(UPoly(c[2]), UPoly(c[1]), UPoly(c[0]));
}

int wildcards(const std::string& p) { return static_cast<int>(std::count(p.begin(), p.end(), 'A')); }

void check_figure(const Figure& f) {
    CAPTURE(f.name);
    const std::string pat = f.pattern;
    for (unsigned mask = 0; mask < (1u << wildcards(pat)); ++mask) {
        CAPTURE(mask);
        std::set<std::pair<int, int>> support;
        QDiffEq eq = build(pat, mask, support);
        CHECK(newton_diagram(eq).filled == support);
        TaxonomyLabel lab = classify(eq);
        CHECK(lab.cls == f.cls);
        CHECK(lab.variant == f.variant);
        CHECK(lab.reduction == f.red);
        CHECK(lab.signature == support_signature(eq));
        CHECK(classify(eq.scaled(parse_expr("(q^2 - t)/(t*k1)"))) == lab);
    }
}

QDiffEq from_strings(const std::vector<std::string>& p, const std::vector<std::string>& z,
                     const std::vector<std::string>& m) {
    auto conv = [](const std::vector<std::string>& v) {
        std::vector<RatFun> out;
        for (auto& s : v) out.push_back(parse_expr(s));
        return UPoly(out);
    };
    return QDiffEq(conv(p), conv(z), conv(m));
}

}  // namespace

TEST_CASE("class-definition diagrams") {
    for (const auto& f : class_figures) check_figure(f);
}

TEST_CASE("catalog diagrams") {
    for (const auto& f : catalog_figures) check_figure(f);
}

TEST_CASE("exactly one form matches each pattern") {
    // Every zero pattern of degree <= 2 gets at most one variant; the
    // first-match order never hides a second match.
    for (unsigned sig = 1; sig < 512; ++sig) {
        std::string pat = "OOO/OOO/OOO";
        for (int b = 0; b < 9; ++b)
            if ((sig >> b) & 1) pat[4 * (b / 3) + b % 3] = 'F';
        std::set<std::pair<int, int>> support;
        QDiffEq eq = build(pat, 0, support);
        TaxonomyLabel lab = classify(eq);
        CHECK(lab.signature == sig);
        int matches = 0;
        for (const auto& f : class_figures) {
            bool ok = true;
            for (int i = 0; i < 11 && ok; ++i)
                if (f.pattern[i] == 'F' && pat[i] != 'F') ok = false;
                else if (f.pattern[i] == 'O' && pat[i] != 'O') ok = false;
            if (ok && f.cls != TaxClass::Unclassified) {
                ++matches;
                CHECK(lab.cls == f.cls);
                CHECK(lab.variant == f.variant);
                CHECK(lab.reduction == f.red);
            }
        }
        CHECK(matches <= 1);
        if (matches == 0) {
            // Remaining patterns are hypergeometric-type subsets or unnamed.
            bool hyper = !((sig >> 6) & 7);
            CHECK(lab.cls == (hyper ? TaxClass::HypergeometricType : TaxClass::Unclassified));
        }
    }
}

TEST_CASE("full support and hull") {
    QDiffEq eq = from_strings({"1", "2", "3"}, {"a", "b", "c"}, {"q", "t", "q*t"});
    NewtonDiagram d = newton_diagram(eq);
    CHECK(d.filled.size() == 9);
    std::vector<std::pair<int, int>> square = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(d.hull == square);
    CHECK(render_diagram(d, DiagramFormat::Ascii) ==
          "2 @---@---@\n"
          "  |       |\n"
          "1 @   @   @\n"
          "  |       |\n"
          "0 @---@---@\n"
          "  M   Z   P\n");
}

TEST_CASE("q-Heun corners lie on the hull") {
    QDiffEq eq = from_strings({"a0", "a1", "a2"}, {"b0", "0", "b2"}, {"g0", "0", "g2"});
    auto hull = newton_diagram(eq).hull;
    for (std::pair<int, int> c : {std::pair{2, 2}, {2, 0}, {0, 2}, {0, 0}})
        CHECK(std::find(hull.begin(), hull.end(), c) != hull.end());
    CHECK(classify(eq).cls == TaxClass::QHeun);
}

TEST_CASE("kite and hypergeometric renderings") {
    // A7' support: P0, Z0, Z1, Z2, M2.
    QDiffEq kite = from_strings({"p0"}, {"z0", "z1", "z2"}, {"0", "0", "m2"});
    NewtonDiagram d = newton_diagram(kite);
    std::vector<std::pair<int, int>> hull = {{1, 0}, {2, 0}, {1, 2}, {0, 2}};
    CHECK(d.hull == hull);
    std::string svg = render_diagram(d, DiagramFormat::Svg);
    CHECK(svg.find("viewBox=\"0 0 200 160\"") != std::string::npos);
    CHECK(svg.find("<path d=\"M 100 130 L 140 130 L 100 50 L 60 50 Z\"") != std::string::npos);
    std::size_t circles = 0, black = 0;
    for (std::size_t p = 0; (p = svg.find("<circle", p)) != std::string::npos; ++p) ++circles;
    for (std::size_t p = 0; (p = svg.find("fill=\"black\"", p)) != std::string::npos; ++p) ++black;
    CHECK(circles == 9);
    CHECK(black == 5);
    CHECK(svg.find("<circle") < svg.find("<path"));
    CHECK(render_diagram(d, DiagramFormat::Svg) == svg);

    QDiffEq hyper = from_strings({"1", "a"}, {"b0", "b1"}, {"g0", "g1"});
    std::string ascii = render_diagram(newton_diagram(hyper), DiagramFormat::Ascii);
    CHECK(ascii.substr(0, ascii.find('\n')) == "2 o   o   o");
    CHECK(classify(hyper).cls == TaxClass::HypergeometricType);
}

TEST_CASE("degree three is representable and unclassified") {
    QDiffEq eq = from_strings({"1", "0", "0", "a"}, {"b"}, {"c", "0", "d"});
    CHECK(eq.degree() == 3);
    NewtonDiagram d = newton_diagram(eq);
    CHECK(d.rows == 4);
    TaxonomyLabel lab = classify(eq);
    CHECK(lab.cls == TaxClass::Unclassified);
    CHECK(lab.signature_string() == "111/000/100/001");
    std::string svg = render_diagram(d, DiagramFormat::Svg);
    CHECK(svg.find("cy=\"10\"") != std::string::npos);
}

TEST_CASE("symbolic nonvanishing") {
    // (a - a) vanishes identically, (a - b) does not.
    QDiffEq eq = from_strings({"a - a", "1"}, {"a - b"}, {"1"});
    CHECK(newton_diagram(eq).filled == std::set<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}});
    CHECK_THROWS_AS(QDiffEq().validate(), DegenerateEquation);
}

TEST_CASE("normalization and proportionality") {
    QDiffEq eq = from_strings({"a", "1"}, {"b", "q"}, {"t"});
    UPoly f = UPoly::linear(parse_expr("1"), parse_expr("-s"));
    QDiffEq big(eq.P * f * parse_expr("k/(q-1)"), eq.Z * f * parse_expr("k/(q-1)"),
                eq.M * f * parse_expr("k/(q-1)"));
    QDiffEq n = big.normalized();
    CHECK(n.degree() == 1);
    CHECK(proportional(n, eq));
    CHECK(n.P.lc() == RatFun(1));
    CHECK_FALSE(proportional(eq, from_strings({"a", "1"}, {"b", "q"}, {"2*t"})));
}

TEST_CASE("mirror map is an involution") {
    for (const char* v : {"cqHE", "cqHE2", "cqHE3", "cqHE4", "bqHE", "bqHE2", "bqHE3", "bqHE4", "bqHE5",
                          "bqHE6", "dqHE", "dqHE2", "dqHE3", "dqHE4"})
        CHECK(mirror_variant(mirror_variant(v)) == v);
}
