#include "fracwave/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fracwave {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

double parse_double(const std::string& field, const std::string& path) {
    double v = 0.0;
    const char* b = field.data();
    const auto res = std::from_chars(b, b + field.size(), v);
    if (res.ec != std::errc() || res.ptr != b + field.size())
        throw std::runtime_error("bad numeric field '" + field + "' in " + path);
    return v;
}

} // namespace

void write_grid_csv(const std::string& path, const GridFunction& g) {
    validate_grid(g);
    auto out = open_out(path);
    out << "x,re,im\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        out << format_double(g.x(i)) << ',' << format_double(g.values[i].real()) << ','
            << format_double(g.values[i].imag()) << '\n';
    finish(out, path);
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,re,im", 0) != 0)
        throw std::runtime_error("missing x,re,im header in " + path);

    std::vector<double> xs;
    GridFunction g;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::stringstream row(line);
        std::string fx, fre, fim;
        if (!std::getline(row, fx, ',') || !std::getline(row, fre, ',')
            || !std::getline(row, fim, ','))
            throw std::runtime_error("short row in " + path);
        xs.push_back(parse_double(fx, path));
        g.values.emplace_back(parse_double(fre, path), parse_double(fim, path));
    }
    if (xs.size() < 2)
        throw std::runtime_error("need at least 2 rows in " + path);
    g.start = xs.front();
    g.step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::abs(xs[i] - g.x(i)) > 1e-9 * std::max(1.0, std::abs(xs[i])))
            throw std::runtime_error("non-uniform x column in " + path);
    validate_grid(g);
    return g;
}

void write_spectrum_csv(const std::string& path, const FourierSpectrum& s) {
    auto out = open_out(path);
    out << "n,re,im\n";
    for (int n = -s.max_index; n <= s.max_index; ++n)
        out << n << ',' << format_double(s.at(n).real()) << ','
            << format_double(s.at(n).imag()) << '\n';
    finish(out, path);
}

void write_field_csv(const std::string& path, const Field2D& f) {
    auto out = open_out(path);
    out << "x,t,re,im,masked\n";
    for (std::size_t i = 0; i < f.x_axis.count; ++i)
        for (std::size_t j = 0; j < f.t_axis.count; ++j) {
            const bool m = f.masked(i, j);
            const cplx v = m ? cplx(0.0, 0.0) : f.at(i, j);
            out << format_double(f.x_axis.at(i)) << ',' << format_double(f.t_axis.at(j))
                << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << ','
                << (m ? '1' : '0') << '\n';
        }
    finish(out, path);
}

void write_multiplier_csv(const std::string& path, const std::vector<MultiplierRow>& rows) {
    auto out = open_out(path);
    out << "omega,lhs_re,lhs_im,rhs_re,rhs_im,relerr\n";
    for (const auto& r : rows)
        out << format_double(r.omega) << ',' << format_double(r.lhs.real()) << ','
            << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ','
            << format_double(r.rhs.imag()) << ',' << format_double(r.relerr) << '\n';
    finish(out, path);
}

void write_field_svg(const std::string& path, const Field2D& f) {
    const int cell = 4;
    const std::size_t nx = f.x_axis.count;
    const std::size_t nt = f.t_axis.count;

    double vmin = 0.0;
    double vmax = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            if (f.masked(i, j))
                continue;
            const double v = f.at(i, j).real();
            if (!any || v < vmin)
                vmin = v;
            if (!any || v > vmax)
                vmax = v;
            any = true;
        }
    const double span = (vmax > vmin) ? (vmax - vmin) : 1.0;

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * cell
        << "\" height=\"" << nt * cell << "\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            if (f.masked(i, j))
                continue;
            const double c = (f.at(i, j).real() - vmin) / span;
            const int r = static_cast<int>(std::lround(11.0 + c * (255.0 - 11.0)));
            const int g = static_cast<int>(std::lround(53.0 + c * (232.0 - 53.0)));
            const int b = static_cast<int>(std::lround(86.0 + c * (115.0 - 86.0)));
            char color[8];
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", r, g, b);
            out << "<rect x=\"" << i * cell << "\" y=\"" << (nt - 1 - j) * cell
                << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << color
                << "\"/>\n";
        }
    out << "</svg>\n";
    finish(out, path);
}

} // namespace fracwave
