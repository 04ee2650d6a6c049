#include "cantor/cli.hpp"

#include <cstdio>
#include <sstream>

namespace cantor::cli {

namespace {

constexpr double kWidth = 1000;
constexpr double kMargin = 40;
constexpr double kStrip = 8;
constexpr double kRow = 3 * kStrip + 14;
constexpr double kTop = 40;

// Plot coordinates cover [0, 2], the hull of C ∪ (C + t).
double x_of(const Rational& v) { return kMargin + v.convert_to<double>() * (kWidth - 2 * kMargin) / 2; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* case_color(const CaseFlags& f) {
    if (f.interval) return "#2e7d32";
    if (f.potential) return "#1565c0";
    if (f.potentially_empty) return "#ef6c00";
    return "#9e9e9e";
}

void rect(std::ostream& os, const Rational& lo, const Rational& hi, double y, const char* color) {
    const double x0 = x_of(lo);
    double w = x_of(hi) - x0;
    if (w < 0.5) w = 0.5;
    os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w) << "\" height=\""
       << fmt(kStrip - 1) << "\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_svg(const DigitSet& ds, const NaryExpansion& t, std::size_t K, const OracleOptions& opts) {
    // Validate the deepest level first so a capacity failure writes nothing.
    build_level(ds, K, opts);
    const Rational tv = rational_from_expansion(t);
    const double height = kTop + kRow * static_cast<double>(K + 1) + 10;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    os << "<text x=\"" << fmt(kMargin) << "\" y=\"16\" font-family=\"monospace\" font-size=\"12\">" << ds.to_string()
       << " t=" << t.to_string() << " (" << to_string(tv) << ")</text>\n";
    os << "<text x=\"" << fmt(kMargin) << "\" y=\"30\" font-family=\"monospace\" font-size=\"10\">"
       << "interval #2e7d32, potential #1565c0, potentially empty #ef6c00, empty #9e9e9e; "
       << "rows: C_k, C_k+trunc_k(t), C_k&#8745;(C_k+t)</text>\n";

    for (std::size_t k = 0; k <= K; ++k) {
        const double y = kTop + kRow * static_cast<double>(k);
        const BigInt N = ipow(ds.base(), k);
        const auto cls = classify_intervals(ds, t, k, opts);
        os << "<g id=\"level-" << k << "\">\n";
        os << "<text x=\"4\" y=\"" << fmt(y + 2 * kStrip) << "\" font-family=\"monospace\" font-size=\"10\">k=" << k
           << "</text>\n";
        for (std::size_t i = 0; i < cls.offsets.size(); ++i)
            rect(os, Rational(cls.offsets[i], N), Rational(cls.offsets[i] + 1, N), y, case_color(cls.flags[i]));
        for (const BigInt& h : cls.offsets)
            rect(os, Rational(h + cls.shift, N), Rational(h + cls.shift + 1, N), y + kStrip, "#6a1b9a");
        for (const auto& c : intersect_exact(ds, tv, k, opts)) rect(os, c.lo, c.hi, y + 2 * kStrip, "#c62828");
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cantor::cli
