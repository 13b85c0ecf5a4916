#pragma once

// Equidistant grids, sampled datasets, and the [-1,1] x [-1,1] normalization.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "legreg/affine.hpp"
#include "legreg/error.hpp"
#include "legreg/real.hpp"

namespace legreg {

/// n equidistant points a = x_0 < ... < x_{n-1} = b with spacing h.
template <Real T>
struct Grid {
    T a{-1};
    T b{1};
    int n = 2;
    T h{2};

    /// a + i*h, except the last point which is b itself so that
    /// save/load round trips reproduce b bit for bit.
    T x(int i) const {
        if (i == n - 1) {
            return b;
        }
        return a + T(i) * h;
    }

    std::vector<T> points() const {
        std::vector<T> xs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            xs[static_cast<std::size_t>(i)] = x(i);
        }
        return xs;
    }

    bool operator==(const Grid&) const = default;
};

template <Real T>
Grid<T> make_grid(const T& a, const T& b, int n) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_count,
                    "make_grid: need at least 2 points, got " + std::to_string(n));
    }
    require_interval(a, b, "make_grid");
    return Grid<T>{a, b, n, (b - a) / T(n - 1)};
}

template <Real T>
struct NormalizationRecord {
    AffineMap<T> x_map;
    AffineMap<T> y_map;
};

template <Real T>
struct Dataset {
    Grid<T> grid;
    std::vector<T> y;
    std::optional<NormalizationRecord<T>> norm;

    bool normalized() const { return norm.has_value(); }

    std::pair<T, T> y_range() const {
        auto [lo, hi] = std::minmax_element(y.begin(), y.end());
        return {*lo, *hi};
    }
};

template <Real T>
Dataset<T> make_dataset(Grid<T> grid, std::vector<T> y) {
    if (y.size() != static_cast<std::size_t>(grid.n)) {
        throw Error(ErrorKind::shape, "dataset: " + std::to_string(y.size()) +
                                          " values for a grid of " + std::to_string(grid.n) +
                                          " points");
    }
    return Dataset<T>{std::move(grid), std::move(y), std::nullopt};
}

/// Relative equidistance tolerance applied by load_dataset.
inline constexpr double kEquidistanceTolerance = 1e-8;

namespace detail {

inline std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == ';' || ch == '\r') {
            if (!cur.empty()) {
                cells.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        cells.push_back(cur);
    }
    return cells;
}

inline bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace detail

/// Reads two numeric columns (x, y) separated by commas or whitespace.  A
/// single leading header line is skipped if its first cell is not numeric.
/// Row numbers in diagnostics are 1-based data rows (header excluded).
template <Real T>
Dataset<T> load_dataset(std::istream& in) {
    std::vector<T> xs;
    std::vector<T> ys;
    std::string line;
    bool first_line = true;
    int row = 0;
    while (std::getline(in, line)) {
        if (detail::blank(line) || line.front() == '#') {
            continue;
        }
        auto cells = detail::split_cells(line);
        if (first_line) {
            first_line = false;
            if (!cells.empty() && !parse_real<T>(cells[0])) {
                continue;  // header
            }
        }
        ++row;
        if (cells.size() != 2) {
            throw Error(ErrorKind::parse, "row " + std::to_string(row) + ": expected 2 columns, got " +
                                              std::to_string(cells.size()));
        }
        auto xv = parse_real<T>(cells[0]);
        auto yv = parse_real<T>(cells[1]);
        if (!xv || !yv) {
            throw Error(ErrorKind::parse, "row " + std::to_string(row) + ": non-numeric cell '" +
                                              (xv ? cells[1] : cells[0]) + "'");
        }
        xs.push_back(*xv);
        ys.push_back(*yv);
    }
    if (xs.size() < 2) {
        throw Error(ErrorKind::invalid_count,
                    "dataset needs at least 2 rows, got " + std::to_string(xs.size()));
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw Error(ErrorKind::ordering,
                        "row " + std::to_string(i + 1) + ": x is not strictly increasing");
        }
    }

    const int n = static_cast<int>(xs.size());
    const T a = xs.front();
    const T b = xs.back();
    const T mean_step = (b - a) / T(n - 1);
    const T tol = T(kEquidistanceTolerance) * (b - a);
    T worst(0);
    std::size_t worst_row = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        using std::abs;
        T dev = abs((xs[i] - xs[i - 1]) - mean_step);
        if (dev >= worst) {
            worst = dev;
            worst_row = i + 1;
        }
    }
    if (worst > tol) {
        std::ostringstream msg;
        msg << "row " << worst_row << ": x spacing deviates from the mean step by "
            << to_double(worst) << " (tolerance " << to_double(tol) << ")";
        throw Error(ErrorKind::equidistance, msg.str());
    }
    return make_dataset(make_grid(a, b, n), std::move(ys));
}

template <Real T>
int serialization_digits() {
    return std::max(17, std::numeric_limits<T>::max_digits10);
}

/// Writes "x,y" lines at full round-trip precision (17 digits for double).
template <Real T>
void save_dataset(const Dataset<T>& ds, std::ostream& out) {
    std::ostringstream buf;
    buf << std::setprecision(serialization_digits<T>());
    for (int i = 0; i < ds.grid.n; ++i) {
        buf << ds.grid.x(i) << ',' << ds.y[static_cast<std::size_t>(i)] << '\n';
    }
    out << buf.str();
}

/// Maps x to [-1,1] by T2 and y from [y_min, y_max] to [-1,1].  A constant y
/// uses scale 1 and offset -y_min, so every normalized value is 0.
template <Real T>
Dataset<T> normalize(const Dataset<T>& ds) {
    if (ds.normalized()) {
        throw Error(ErrorKind::invalid_domain, "normalize: dataset is already normalized");
    }
    auto [ymin, ymax] = ds.y_range();
    NormalizationRecord<T> rec;
    rec.x_map = t2_forward(ds.grid.a, ds.grid.b);
    rec.y_map = ymax > ymin ? t2_forward(ymin, ymax) : AffineMap<T>{T(1), -ymin};

    std::vector<T> v(ds.y.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        // The affine form can land one ulp outside [-1,1] at the extremes.
        v[i] = std::clamp(rec.y_map.forward(ds.y[i]), T(-1), T(1));
    }
    Dataset<T> out = make_dataset(make_grid(T(-1), T(1), ds.grid.n), std::move(v));
    out.norm = rec;
    return out;
}

}  // namespace legreg
