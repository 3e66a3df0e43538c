#include "mvgrowth/series_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mvg {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_series(std::ostream& os, const PowerSeries& s) {
    os << "dim " << s.dimension() << " degree " << s.truncation_degree() << "\n";
    for (const auto& [alpha, c] : s.coefficients()) {
        for (int j = 0; j < s.dimension(); ++j) os << alpha[j] << " ";
        os << fmt_double(c.real()) << " " << fmt_double(c.imag()) << "\n";
    }
}

PowerSeries read_series(std::istream& is) {
    std::string line;
    int dim = -1, degree = -1;
    PowerSeries::CoeffMap coeffs;
    bool header_seen = false;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!header_seen) {
            std::string kw1, kw2;
            if (!(ls >> kw1)) continue;  // blank line
            if (kw1 != "dim" || !(ls >> dim >> kw2 >> degree) || kw2 != "degree")
                throw std::runtime_error("series file: malformed header line");
            if (dim < 1 || degree < 0)
                throw std::runtime_error("series file: invalid dim/degree");
            header_seen = true;
            continue;
        }
        std::vector<int> e(static_cast<size_t>(dim));
        bool any = false;
        for (int j = 0; j < dim; ++j) {
            if (!(ls >> e[static_cast<size_t>(j)])) {
                if (j == 0 && !any) goto next_line;  // blank / comment-only line
                throw std::runtime_error("series file: truncated term line");
            }
            any = true;
        }
        {
            double re, im;
            if (!(ls >> re >> im)) throw std::runtime_error("series file: missing coefficient");
            MultiIndex alpha(e);
            if (!coeffs.emplace(alpha, std::complex<double>(re, im)).second)
                throw std::runtime_error("series file: duplicate index " + alpha.to_string());
        }
    next_line:;
    }
    if (!header_seen) throw std::runtime_error("series file: missing header");
    return PowerSeries(dim, degree, std::move(coeffs), /*exact=*/false);
}

void write_series_file(const std::string& path, const PowerSeries& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_series(os, s);
}

PowerSeries read_series_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_series(is);
}

}  // namespace mvg
