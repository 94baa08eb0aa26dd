#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sltp/rational.hpp"

namespace sltp {

// Index of a point inside one PointedMetricSpace. Ids are only meaningful
// relative to the space that minted them.
struct PointId {
    std::uint32_t index = 0;
    friend auto operator<=>(const PointId&, const PointId&) = default;
};

enum class MetricAxiom { Nonnegative, ZeroDiagonal, Separation, Symmetry, Triangle };

inline const char* axiom_name(MetricAxiom a) {
    switch (a) {
        case MetricAxiom::Nonnegative: return "nonnegative";
        case MetricAxiom::ZeroDiagonal: return "zero-diagonal";
        case MetricAxiom::Separation: return "separation";
        case MetricAxiom::Symmetry: return "symmetry";
        case MetricAxiom::Triangle: return "triangle";
    }
    return "?";
}

struct AxiomViolation {
    MetricAxiom axiom;
    std::vector<PointId> points;  // offending tuple, axiom-dependent arity
    Rational lhs;
    Rational rhs;
    friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Labeled coordinate vector; the input form for l1-style spaces. Shorter
// vectors are padded with zeros on the right.
struct L1Point {
    std::string label;
    std::vector<Rational> coords;
};

// A finite metric space with a distinguished base point. Construction does
// not check the metric axioms; run validate_metric for that. The distance
// table is stored dense and row-major.
class PointedMetricSpace {
  public:
    static PointedMetricSpace from_matrix(std::vector<std::string> names,
                                          std::string_view base_name,
                                          std::vector<std::vector<Rational>> matrix) {
        PointedMetricSpace s;
        s.init_names(std::move(names));
        const std::size_t n = s.names_.size();
        if (matrix.size() != n)
            throw std::invalid_argument("distance matrix has " + std::to_string(matrix.size()) +
                                        " rows for " + std::to_string(n) + " points");
        s.dist_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (matrix[i].size() != n)
                throw std::invalid_argument("distance matrix row " + std::to_string(i) +
                                            " has wrong length");
            for (std::size_t j = 0; j < n; ++j) s.dist_[i * n + j] = std::move(matrix[i][j]);
        }
        s.base_ = s.require(base_name);
        return s;
    }

    static PointedMetricSpace from_l1_vectors(const std::vector<L1Point>& points,
                                              std::string_view base_name) {
        std::vector<std::string> names;
        names.reserve(points.size());
        std::size_t dim = 0;
        for (const auto& p : points) {
            names.push_back(p.label);
            dim = std::max(dim, p.coords.size());
        }
        auto coord = [&](std::size_t p, std::size_t i) -> Rational {
            return i < points[p].coords.size() ? points[p].coords[i] : Rational(0);
        };
        const std::size_t n = points.size();
        std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Rational d = 0;
                for (std::size_t c = 0; c < dim; ++c) {
                    Rational diff = coord(i, c) - coord(j, c);
                    d += diff < 0 ? Rational(-diff) : diff;
                }
                if (d == 0)
                    throw std::invalid_argument("duplicate vectors: '" + points[i].label +
                                                "' and '" + points[j].label + "'");
                matrix[i][j] = d;
                matrix[j][i] = std::move(d);
            }
        }
        return from_matrix(std::move(names), base_name, std::move(matrix));
    }

    std::size_t size() const { return names_.size(); }
    PointId base() const { return base_; }
    const std::string& name(PointId p) const { return names_.at(p.index); }

    std::optional<PointId> find(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) return std::nullopt;
        return PointId{it->second};
    }

    PointId require(std::string_view name) const {
        if (auto p = find(name)) return *p;
        throw std::invalid_argument("unknown point '" + std::string(name) + "'");
    }

    const Rational& dist(PointId a, PointId b) const {
        return dist_.at(static_cast<std::size_t>(a.index) * size() + b.index);
    }

    std::vector<PointId> points() const {
        std::vector<PointId> out(size());
        for (std::uint32_t i = 0; i < size(); ++i) out[i] = PointId{i};
        return out;
    }

    friend bool operator==(const PointedMetricSpace& a, const PointedMetricSpace& b) {
        return a.names_ == b.names_ && a.base_ == b.base_ && a.dist_ == b.dist_;
    }

  private:
    void init_names(std::vector<std::string> names) {
        if (names.empty()) throw std::invalid_argument("a space needs at least one point");
        names_ = std::move(names);
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (!by_name_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate point name '" + names_[i] + "'");
        }
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> by_name_;
    std::vector<Rational> dist_;
    PointId base_;
};

// Checks all metric axioms and reports every violation it finds, in
// deterministic tuple order. Never throws on bad values; shape problems are
// rejected earlier, at construction.
inline ValidationReport validate_metric(const PointedMetricSpace& s) {
    ValidationReport report;
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    auto flag = [&](MetricAxiom axiom, std::vector<PointId> pts, Rational lhs, Rational rhs) {
        report.ok = false;
        report.violations.push_back({axiom, std::move(pts), std::move(lhs), std::move(rhs)});
    };
    for (std::uint32_t i = 0; i < n; ++i) {
        PointId p{i};
        if (s.dist(p, p) != 0) flag(MetricAxiom::ZeroDiagonal, {p}, s.dist(p, p), Rational(0));
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            PointId p{i}, q{j};
            const Rational& d = s.dist(p, q);
            if (d < 0) flag(MetricAxiom::Nonnegative, {p, q}, d, Rational(0));
            if (i < j) {
                if (d != s.dist(q, p)) flag(MetricAxiom::Symmetry, {p, q}, d, s.dist(q, p));
                if (d == 0 && s.dist(q, p) == 0)
                    flag(MetricAxiom::Separation, {p, q}, Rational(0), Rational(0));
            }
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::uint32_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                PointId p{i}, q{j}, r{k};
                Rational through = s.dist(p, r) + s.dist(r, q);
                if (s.dist(p, q) > through)
                    flag(MetricAxiom::Triangle, {p, q, r}, s.dist(p, q), std::move(through));
            }
        }
    }
    return report;
}

// Open ball: strictly-inside points in index order. Radius 0 is empty.
inline std::vector<PointId> open_ball(const PointedMetricSpace& s, PointId center,
                                      const Rational& radius) {
    if (center.index >= s.size()) throw std::invalid_argument("ball center outside space");
    std::vector<PointId> out;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
        if (s.dist(PointId{i}, center) < radius) out.push_back(PointId{i});
    }
    return out;
}

}  // namespace sltp
