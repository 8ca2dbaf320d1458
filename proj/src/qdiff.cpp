#include "qheun/qdiff.hpp"

#include "qheun/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>

namespace qheun {

const char* shift_name(Shift s) {
    switch (s) {
        case Shift::M: return "M";
        case Shift::Z: return "Z";
        case Shift::P: return "P";
    }
    return "?";
}

QDiffEq::QDiffEq(UPoly p, UPoly z, UPoly m, std::string var)
    : P(std::move(p)), Z(std::move(z)), M(std::move(m)), variable(std::move(var)) {}

const UPoly& QDiffEq::coeffs(Shift s) const {
    return s == Shift::P ? P : s == Shift::Z ? Z : M;
}

UPoly& QDiffEq::coeffs(Shift s) {
    return s == Shift::P ? P : s == Shift::Z ? Z : M;
}

int QDiffEq::degree() const { return std::max({P.degree(), Z.degree(), M.degree()}); }

void QDiffEq::validate() const {
    if (is_zero()) throw DegenerateEquation("all coefficients of the equation vanish");
}

QDiffEq QDiffEq::scaled(const RatFun& c) const {
    return QDiffEq(P * c, Z * c, M * c, variable);
}

QDiffEq QDiffEq::substitute(const std::map<Symbol, RatFun>& binding) const {
    return QDiffEq(P.substitute(binding), Z.substitute(binding), M.substitute(binding), variable);
}

QDiffEq QDiffEq::normalized() const {
    validate();
    UPoly g = UPoly::gcd(UPoly::gcd(P, Z), M);
    QDiffEq r = *this;
    if (g.degree() > 0) {
        r.P = P / g;
        r.Z = Z / g;
        r.M = M / g;
    }
    const UPoly& lead = !r.P.is_zero() ? r.P : !r.Z.is_zero() ? r.Z : r.M;
    return r.scaled(lead.lc().inverse());
}

bool QDiffEq::contains(Symbol s) const { return P.contains(s) || Z.contains(s) || M.contains(s); }

std::set<Symbol, SymbolNameLess> QDiffEq::parameters() const {
    std::set<Symbol, SymbolNameLess> out;
    for (const UPoly* u : {&P, &Z, &M})
        for (const RatFun& c : u->coeffs()) {
            auto v = c.variables();
            out.insert(v.begin(), v.end());
        }
    return out;
}

std::string QDiffEq::str() const {
    std::ostringstream os;
    os << "P = " << P.str(variable) << "; Z = " << Z.str(variable) << "; M = " << M.str(variable);
    return os.str();
}

bool proportional(const QDiffEq& a, const QDiffEq& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const Shift all[] = {Shift::P, Shift::Z, Shift::M};
    for (Shift s : all)
        if (a.coeffs(s).is_zero() != b.coeffs(s).is_zero()) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(a.coeffs(all[i]) * b.coeffs(all[j]) == a.coeffs(all[j]) * b.coeffs(all[i]))) return false;
    return true;
}

namespace {

long cross(std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

std::vector<std::pair<int, int>> convex_hull(std::vector<std::pair<int, int>> pts) {
    // Monotone chain over points sorted by (row, column): starts at the
    // lowest-leftmost point and runs counterclockwise.
    std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<std::pair<int, int>> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

NewtonDiagram newton_diagram(const QDiffEq& eq) {
    NewtonDiagram d;
    for (Shift s : {Shift::M, Shift::Z, Shift::P}) {
        const UPoly& u = eq.coeffs(s);
        for (int k = 0; k <= u.degree(); ++k)
            if (!u.coeff(k).is_zero()) d.filled.insert({static_cast<int>(s), k});
    }
    d.rows = std::max(3, eq.degree() + 1);
    d.hull = convex_hull({d.filled.begin(), d.filled.end()});
    return d;
}

const char* tax_class_name(TaxClass c) {
    switch (c) {
        case TaxClass::QHeun: return "QHeun";
        case TaxClass::Confluent: return "Confluent";
        case TaxClass::Biconfluent: return "Biconfluent";
        case TaxClass::DoublyConfluent: return "DoublyConfluent";
        case TaxClass::HypergeometricType: return "HypergeometricType";
        case TaxClass::Unclassified: return "Unclassified";
    }
    return "?";
}

const char* reduction_name(Reduction r) {
    switch (r) {
        case Reduction::NonReduced: return "NonReduced";
        case Reduction::SinglyReduced: return "SinglyReduced";
        case Reduction::DoublyReduced: return "DoublyReduced";
        case Reduction::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::uint16_t support_signature(const QDiffEq& eq) {
    std::uint16_t sig = 0;
    for (auto [col, row] : newton_diagram(eq).filled)
        if (row < 4) sig |= static_cast<std::uint16_t>(1u << (3 * row + col));
    return sig;
}

std::string TaxonomyLabel::signature_string() const {
    int rows = (signature >> 9) ? 4 : 3;
    std::string s;
    for (int r = 0; r < rows; ++r) {
        if (r) s += '/';
        for (int c = 0; c < 3; ++c) s += (signature >> (3 * r + c)) & 1 ? '1' : '0';
    }
    return s;
}

TaxonomyLabel classify(const QDiffEq& eq) {
    TaxonomyLabel out;
    out.signature = support_signature(eq);
    if (eq.degree() > 2) return out;

    auto nz = [&](Shift s, int k) { return (out.signature >> (3 * k + static_cast<int>(s))) & 1; };
    const bool a0 = nz(Shift::P, 0), a1 = nz(Shift::P, 1), a2 = nz(Shift::P, 2);
    const bool b0 = nz(Shift::Z, 0), b2 = nz(Shift::Z, 2);
    const bool g0 = nz(Shift::M, 0), g1 = nz(Shift::M, 1), g2 = nz(Shift::M, 2);

    auto set = [&](TaxClass c, const char* v, Reduction r) {
        out.cls = c;
        out.variant = v;
        out.reduction = r;
        return out;
    };
    auto red1 = [](bool beta) { return beta ? Reduction::NonReduced : Reduction::SinglyReduced; };

    if (a2 && a0 && g2 && g0) return set(TaxClass::QHeun, "", Reduction::NotApplicable);
    if (!a2 && !b2 && !g2)
        return set(TaxClass::HypergeometricType, "", Reduction::NotApplicable);

    if (!a2 && a1 && a0 && g2 && g0) return set(TaxClass::Confluent, "cqHE", red1(b2));
    if (!g2 && a2 && a0 && g1 && g0) return set(TaxClass::Confluent, "cqHE2", red1(b2));
    if (!g0 && a2 && a0 && g2 && g1) return set(TaxClass::Confluent, "cqHE3", red1(b0));
    if (!a0 && a2 && a1 && g2 && g0) return set(TaxClass::Confluent, "cqHE4", red1(b0));

    const auto NA = Reduction::NotApplicable;
    if (!a2 && !a1 && a0 && b2 && g2 && g0) return set(TaxClass::Biconfluent, "bqHE", NA);
    if (!g2 && !g1 && g0 && a2 && a0 && b2) return set(TaxClass::Biconfluent, "bqHE2", NA);
    if (!g1 && !g0 && g2 && a2 && a0 && b0) return set(TaxClass::Biconfluent, "bqHE3", NA);
    if (!a1 && !a0 && a2 && b0 && g2 && g0) return set(TaxClass::Biconfluent, "bqHE4", NA);
    if (!a2 && !g2 && a1 && a0 && b2 && g1 && g0) return set(TaxClass::Biconfluent, "bqHE5", NA);
    if (!a0 && !g0 && a2 && a1 && b0 && g2 && g1) return set(TaxClass::Biconfluent, "bqHE6", NA);

    auto red2 = [](bool x, bool y) {
        return x && y ? Reduction::NonReduced : (x || y) ? Reduction::SinglyReduced : Reduction::DoublyReduced;
    };
    if (!a2 && !a0 && a1 && g2 && g0) return set(TaxClass::DoublyConfluent, "dqHE", red2(b2, b0));
    if (!g2 && !g0 && g1 && a2 && a0) return set(TaxClass::DoublyConfluent, "dqHE2", red2(b2, b0));
    if (!a2 && !g0 && a1 && a0 && g2 && g1) return set(TaxClass::DoublyConfluent, "dqHE3", red2(b2, b0));
    if (!a0 && !g2 && a2 && a1 && g1 && g0) return set(TaxClass::DoublyConfluent, "dqHE4", red2(b2, b0));

    return out;
}

std::string mirror_variant(const std::string& v) {
    static const std::map<std::string, std::string> m = {
        {"cqHE", "cqHE3"},   {"cqHE3", "cqHE"},   {"cqHE2", "cqHE4"}, {"cqHE4", "cqHE2"},
        {"bqHE", "bqHE3"},   {"bqHE3", "bqHE"},   {"bqHE2", "bqHE4"}, {"bqHE4", "bqHE2"},
        {"bqHE5", "bqHE6"},  {"bqHE6", "bqHE5"},  {"dqHE", "dqHE2"},  {"dqHE2", "dqHE"},
        {"dqHE3", "dqHE3"},  {"dqHE4", "dqHE4"},
    };
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
}

namespace {

std::string render_ascii(const NewtonDiagram& d) {
    const int R = d.rows - 1;
    const int W = 9, H = 2 * R + 1;
    std::vector<std::string> g(H, std::string(W, ' '));
    auto X = [](int col) { return 4 * col; };
    auto Y = [R](int row) { return 2 * (R - row); };
    for (int r = 0; r <= R; ++r)
        for (int c = 0; c < 3; ++c) g[Y(r)][X(c)] = d.filled.count({c, r}) ? '@' : 'o';

    const auto& h = d.hull;
    for (std::size_t i = 0; i < h.size() && h.size() > 1; ++i) {
        auto a = h[i], b = h[(i + 1) % h.size()];
        int x0 = X(a.first), y0 = Y(a.second), x1 = X(b.first), y1 = Y(b.second);
        int dx = x1 - x0, dy = y1 - y0;
        char ch = dy == 0 ? '-' : dx == 0 ? '|' : ((dx > 0) == (dy > 0) ? '\\' : '/');
        int steps = std::max(std::abs(dx), std::abs(dy));
        for (int t = 1; t < steps; ++t) {
            // Round half away from zero, symmetric in direction.
            auto lerp = [&](int p0, int dp) {
                long num = 2L * dp * t + (dp >= 0 ? steps : -steps);
                return p0 + static_cast<int>(num / (2L * steps));
            };
            int x = lerp(x0, dx), y = lerp(y0, dy);
            if (g[y][x] == ' ') g[y][x] = ch;
        }
    }

    std::ostringstream os;
    for (int y = 0; y < H; ++y) {
        std::string line = (y % 2 == 0 ? std::to_string(R - y / 2) : std::string(" ")) + " " + g[y];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    os << "  M   Z   P\n";
    return os.str();
}

std::string render_svg(const NewtonDiagram& d) {
    auto X = [](int col) { return 60 + 40 * col; };
    auto Y = [](int row) { return 130 - 40 * row; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 200 160\">\n";
    for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < 3; ++c) {
            bool f = d.filled.count({c, r}) > 0;
            os << "  <circle cx=\"" << X(c) << "\" cy=\"" << Y(r) << "\" r=\"5\" fill=\""
               << (f ? "black" : "white") << "\" stroke=\"black\"/>\n";
        }
    if (!d.hull.empty()) {
        os << "  <path d=\"";
        for (std::size_t i = 0; i < d.hull.size(); ++i)
            os << (i ? " L " : "M ") << X(d.hull[i].first) << ' ' << Y(d.hull[i].second);
        os << " Z\" fill=\"none\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_diagram(const NewtonDiagram& d, DiagramFormat fmt) {
    return fmt == DiagramFormat::Svg ? render_svg(d) : render_ascii(d);
}

}  // namespace qheun
