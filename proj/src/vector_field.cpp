#include "holreg/vector_field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace holreg {

PolyVectorField::PolyVectorField(std::vector<MultiPoly> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("vector field needs components");
    const int n = static_cast<int>(components_.size());
    for (const MultiPoly& c : components_)
        if (c.nvars() != n)
            throw std::invalid_argument("component ring does not match field dimension");
}

PolyVectorField PolyVectorField::zero(int n) {
    return PolyVectorField(std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly::zero(n)));
}

PolyVectorField PolyVectorField::constant(int n, const std::vector<GaussRational>& c) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("constant vector length");
    std::vector<MultiPoly> comps;
    comps.reserve(c.size());
    for (const GaussRational& v : c) comps.push_back(MultiPoly::constant(n, v));
    return PolyVectorField(std::move(comps));
}

PolyVectorField PolyVectorField::coordinate(int n, int c) {
    std::vector<GaussRational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(c)] = GaussRational(1);
    return constant(n, v);
}

PolyVectorField PolyVectorField::euler(int n) {
    std::vector<MultiPoly> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) comps.push_back(MultiPoly::variable(n, j));
    return PolyVectorField(std::move(comps));
}

bool PolyVectorField::is_zero() const {
    for (const MultiPoly& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

int PolyVectorField::degree() const {
    int d = -1;
    for (const MultiPoly& c : components_) d = std::max(d, c.degree());
    return d;
}

std::vector<GaussRational> PolyVectorField::evaluate(
    const std::vector<GaussRational>& point) const {
    std::vector<GaussRational> out;
    out.reserve(components_.size());
    for (const MultiPoly& c : components_) out.push_back(c.evaluate(point));
    return out;
}

PolyVectorField PolyVectorField::operator-() const {
    std::vector<MultiPoly> comps;
    comps.reserve(components_.size());
    for (const MultiPoly& c : components_) comps.push_back(-c);
    return PolyVectorField(std::move(comps));
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
    if (dim() != o.dim()) throw std::invalid_argument("field dimension mismatch");
    for (std::size_t j = 0; j < components_.size(); ++j) components_[j] += o.components_[j];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
    if (dim() != o.dim()) throw std::invalid_argument("field dimension mismatch");
    for (std::size_t j = 0; j < components_.size(); ++j) components_[j] -= o.components_[j];
    return *this;
}

PolyVectorField PolyVectorField::scaled(const GaussRational& c) const {
    std::vector<MultiPoly> comps;
    comps.reserve(components_.size());
    for (const MultiPoly& p : components_) comps.push_back(p.scaled(c));
    return PolyVectorField(std::move(comps));
}

std::string PolyVectorField::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (components_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << components_[j].to_string() << ")*d" << j;
    }
    if (first) os << "0";
    return os.str();
}

PolyVectorField bracket(const PolyVectorField& xi, const PolyVectorField& zeta) {
    if (xi.dim() != zeta.dim()) throw std::invalid_argument("field dimension mismatch");
    const int n = xi.dim();
    std::vector<MultiPoly> comps(static_cast<std::size_t>(n), MultiPoly::zero(n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            if (!xi.component(j).is_zero())
                comps[static_cast<std::size_t>(k)] +=
                    xi.component(j) * zeta.component(k).partial_derivative(j);
            if (!zeta.component(j).is_zero())
                comps[static_cast<std::size_t>(k)] -=
                    zeta.component(j) * xi.component(k).partial_derivative(j);
        }
    }
    return PolyVectorField(std::move(comps));
}

std::map<int, PolyVectorField> homogeneous_components(const PolyVectorField& xi) {
    const int n = xi.dim();
    std::map<int, std::vector<MultiPoly>> parts;
    for (int j = 0; j < n; ++j) {
        for (const auto& [e, c] : xi.component(j).terms()) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            int weight = deg - 1;
            auto it = parts.find(weight);
            if (it == parts.end())
                it = parts.emplace(weight, std::vector<MultiPoly>(static_cast<std::size_t>(n),
                                                                  MultiPoly::zero(n)))
                         .first;
            it->second[static_cast<std::size_t>(j)].add_term(e, c);
        }
    }
    std::map<int, PolyVectorField> out;
    for (auto& [w, comps] : parts) out.emplace(w, PolyVectorField(std::move(comps)));
    return out;
}

FieldSupport::FieldSupport(const std::vector<PolyVectorField>& fields) {
    if (fields.empty()) throw std::invalid_argument("empty field family");
    n_ = fields.front().dim();
    for (const PolyVectorField& f : fields) {
        if (f.dim() != n_) throw std::invalid_argument("field dimension mismatch");
        for (int j = 0; j < n_; ++j)
            for (const auto& [e, c] : f.component(j).terms()) index_.emplace(std::make_pair(j, e), 0);
    }
    keys_.reserve(index_.size());
    for (auto& [key, slot] : index_) {
        slot = keys_.size();
        keys_.push_back(key);
    }
}

std::optional<std::vector<GaussRational>> FieldSupport::coordinates(
    const PolyVectorField& xi) const {
    if (xi.dim() != n_) throw std::invalid_argument("field dimension mismatch");
    std::vector<GaussRational> row(keys_.size());
    for (int j = 0; j < n_; ++j)
        for (const auto& [e, c] : xi.component(j).terms()) {
            auto it = index_.find(std::make_pair(j, e));
            if (it == index_.end()) return std::nullopt;
            row[it->second] = c;
        }
    return row;
}

QiMatrix FieldSupport::matrix(const std::vector<PolyVectorField>& fields) const {
    QiMatrix m(fields.size(), keys_.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        auto row = coordinates(fields[i]);
        if (!row) throw std::logic_error("field escapes its own support");
        for (std::size_t j = 0; j < keys_.size(); ++j) m.at(i, j) = (*row)[j];
    }
    return m;
}

PolyVectorField FieldSupport::field_from(const std::vector<GaussRational>& row) const {
    if (row.size() != keys_.size()) throw std::invalid_argument("coordinate row length mismatch");
    std::vector<MultiPoly> comps(static_cast<std::size_t>(n_), MultiPoly::zero(n_));
    for (std::size_t s = 0; s < keys_.size(); ++s) {
        if (row[s].is_zero()) continue;
        comps[static_cast<std::size_t>(keys_[s].first)].add_term(keys_[s].second, row[s]);
    }
    return PolyVectorField(std::move(comps));
}

namespace {

// Realification [re | im]: real linear combinations of fields correspond to
// rational solutions of the doubled system.
std::vector<GaussRational> realify(const std::vector<GaussRational>& v) {
    std::vector<GaussRational> out;
    out.reserve(2 * v.size());
    for (const GaussRational& z : v) out.emplace_back(z.re);
    for (const GaussRational& z : v) out.emplace_back(z.im);
    return out;
}

}  // namespace

std::optional<std::vector<GaussRational>> expand_in_span(const std::vector<PolyVectorField>& basis,
                                                         const PolyVectorField& target,
                                                         Ground ground) {
    if (basis.empty()) return target.is_zero() ? std::make_optional(std::vector<GaussRational>{})
                                               : std::nullopt;
    std::vector<PolyVectorField> all = basis;
    all.push_back(target);
    FieldSupport support(all);
    auto tv = support.coordinates(target);
    QiMatrix bm = support.matrix(basis);
    // Columns of the solve are basis members; rows are support slots.
    QiMatrix lhs;
    std::vector<GaussRational> rhs;
    if (ground == Ground::Complex) {
        lhs = bm.transpose();
        rhs = *tv;
    } else {
        lhs = QiMatrix(2 * support.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto rrow = realify(bm.row(i));
            for (std::size_t s = 0; s < rrow.size(); ++s) lhs.at(s, i) = rrow[s];
        }
        rhs = realify(*tv);
    }
    // solve_vector rejects rank-deficient bases; canonical bases are independent.
    return solve_vector(lhs, rhs);
}

bool in_span(const std::vector<PolyVectorField>& basis, const PolyVectorField& target,
             Ground ground) {
    if (target.is_zero()) return true;
    if (basis.empty()) return false;
    std::vector<PolyVectorField> all = basis;
    all.push_back(target);
    FieldSupport support(all);
    QiMatrix bm = support.matrix(basis);
    QiMatrix with_target = support.matrix(all);
    if (ground == Ground::Complex) return rank(bm) == rank(with_target);
    auto realmat = [](const QiMatrix& m) {
        QiMatrix r(m.rows(), 2 * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                r.at(i, j) = GaussRational(m.at(i, j).re);
                r.at(i, m.cols() + j) = GaussRational(m.at(i, j).im);
            }
        return r;
    };
    return rank(realmat(bm)) == rank(realmat(with_target));
}

}  // namespace holreg
