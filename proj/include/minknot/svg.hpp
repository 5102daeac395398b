#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "minknot/braid.hpp"

namespace minknot {

// Braid diagram as SVG 1.1: the N strand height graphs h_k(t) = sin 2pi
// q(t+k)/N over one unit of t, with a gap cut into the under strand at each
// crossing. The x axis is t; the drawing is schematic, not a 3D view.
inline std::string render_braid_svg(const KnotParams& params,
                                    const std::vector<Crossing>& crossings) {
    const int N = params.N, q = params.q;
    const double eps = epsilon_offset(N, q).to_double();
    const int W = 900, H = 360, pad = 20;
    const int samples = 1400;
    auto X = [&](double t) { return pad + (t - eps) * (W - 2 * pad); };
    auto Y = [&](double y) { return H / 2.0 - y * (H / 2.0 - pad); };
    auto h = [&](int k, double t) { return std::sin(2.0 * M_PI * q * (t + k) / N); };

    // gap half-width in t units, below half the minimal crossing spacing
    const double gap = std::min(0.2 * N / (2.0 * q), 0.008);
    static const char* colors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                   "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int k = 0; k < N; ++k) {
        // collect the cut intervals where strand k goes under
        std::vector<std::pair<double, double>> cuts;
        for (const Crossing& c : crossings) {
            if (c.k != k && c.l != k) continue;
            double t = c.time.to_double();
            double f = std::cos(2.0 * M_PI * (static_cast<double>(params.p) * (t + c.k) / N +
                                              params.phase.to_double())) -
                       std::cos(2.0 * M_PI * (static_cast<double>(params.p) * (t + c.l) / N +
                                              params.phase.to_double()));
            int under = f > 0 ? c.l : c.k;
            if (under == k) cuts.emplace_back(t - gap, t + gap);
        }
        os << "<polyline fill=\"none\" stroke=\"" << colors[k % 8]
           << "\" stroke-width=\"2\" points=\"";
        bool pending_break = false;
        for (int i = 0; i <= samples; ++i) {
            double t = eps + static_cast<double>(i) / samples;
            bool in_cut = false;
            for (auto& [a, b] : cuts)
                if (t > a && t < b) in_cut = true;
            if (in_cut) {
                pending_break = true;
                continue;
            }
            if (pending_break) {
                os << "\"/>\n<polyline fill=\"none\" stroke=\"" << colors[k % 8]
                   << "\" stroke-width=\"2\" points=\"";
                pending_break = false;
            }
            os << X(t) << "," << Y(h(k, t)) << " ";
        }
        os << "\"/>\n";
        os << "<text x=\"" << pad << "\" y=\"" << Y(h(k, eps)) - 6 << "\" font-size=\"11\" fill=\""
           << colors[k % 8] << "\">" << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline void write_braid_svg(const KnotParams& params, const std::vector<Crossing>& crossings,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write SVG to " + path);
    out << render_braid_svg(params, crossings);
}

}  // namespace minknot
