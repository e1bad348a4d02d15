#include "workbench/grading.hpp"

#include <algorithm>
#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

bool Degree::is_zero() const {
    for (const auto& z : free)
        if (z != 0) return false;
    for (const auto& z : torsion)
        if (z != 0) return false;
    return true;
}

std::string Degree::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < free.size(); ++i) out << (i ? "," : "") << free[i].get_str();
    out << ")";
    if (!torsion.empty()) {
        out << "+(";
        for (std::size_t i = 0; i < torsion.size(); ++i) out << (i ? "," : "") << torsion[i].get_str();
        out << ")";
    }
    return out.str();
}

GradingGroup GradingGroup::quotient(const IntMatrix& relation_rows, std::vector<VarId> coords) {
    const int N = static_cast<int>(coords.size());
    // Columns of relation_rows^T generate the sublattice; U maps Z^N to SNF
    // coordinates, where the quotient splits off Z/d_i per diagonal entry.
    SmithDecomposition snf = smith_normal_form(relation_rows.transpose());
    const int k = relation_rows.rows();
    const int diag = std::min(N, k);

    GradingGroup g;
    g.coords_ = std::move(coords);
    int rank = 0;
    std::vector<int> torsion_idx;
    for (int i = 0; i < diag; ++i) {
        if (snf.D.at(i, i) == 0) break;
        ++rank;
        if (snf.D.at(i, i) > 1) {
            torsion_idx.push_back(i);
            g.moduli_.push_back(snf.D.at(i, i));
        }
    }
    g.torsion_rows_ = IntMatrix(static_cast<int>(torsion_idx.size()), N);
    for (std::size_t t = 0; t < torsion_idx.size(); ++t)
        for (int j = 0; j < N; ++j) g.torsion_rows_.at(static_cast<int>(t), j) = snf.U.at(torsion_idx[t], j);
    g.free_rows_ = IntMatrix(N - rank, N);
    for (int i = rank; i < N; ++i)
        for (int j = 0; j < N; ++j) g.free_rows_.at(i - rank, j) = snf.U.at(i, j);
    return g;
}

Degree GradingGroup::zero() const {
    Degree d;
    d.free.assign(static_cast<std::size_t>(free_rank()), 0);
    d.torsion.assign(moduli_.size(), 0);
    return d;
}

Degree GradingGroup::reduce(Degree d) const {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        mpz_class& t = d.torsion[i];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), moduli_[i].get_mpz_t());
    }
    return d;
}

Degree GradingGroup::degree_of_variable(VarId v) const {
    Degree d = zero();
    if (v.is_param()) return d;
    auto it = std::find(coords_.begin(), coords_.end(), v);
    if (it == coords_.end())
        throw UnknownVariableError(v.name(), "variable " + v.name() + " is not graded");
    int j = static_cast<int>(it - coords_.begin());
    for (int i = 0; i < free_rows_.rows(); ++i) d.free[static_cast<std::size_t>(i)] = free_rows_.at(i, j);
    for (int i = 0; i < torsion_rows_.rows(); ++i) d.torsion[static_cast<std::size_t>(i)] = torsion_rows_.at(i, j);
    return reduce(std::move(d));
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
    Degree d = a;
    for (std::size_t i = 0; i < d.free.size(); ++i) d.free[i] += b.free[i];
    for (std::size_t i = 0; i < d.torsion.size(); ++i) d.torsion[i] += b.torsion[i];
    return reduce(std::move(d));
}

Degree GradingGroup::subtract(const Degree& a, const Degree& b) const {
    Degree d = a;
    for (std::size_t i = 0; i < d.free.size(); ++i) d.free[i] -= b.free[i];
    for (std::size_t i = 0; i < d.torsion.size(); ++i) d.torsion[i] -= b.torsion[i];
    return reduce(std::move(d));
}

GradingGroup grading_group(const TrinomialData& data) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);

    std::vector<VarId> coords = data.all_variables();
    const int N = static_cast<int>(coords.size());
    auto column_of = [&](VarId v) {
        return static_cast<int>(std::find(coords.begin(), coords.end(), v) - coords.begin());
    };

    IntMatrix rows(data.r(), N);
    if (data.type == 1) {
        // deg T_i^{l_i} = 0 for every block.
        for (int i = 1; i <= data.r(); ++i) {
            const auto& l = data.block_exponents(i);
            for (int j = 1; j <= static_cast<int>(l.size()); ++j)
                rows.at(i - 1, column_of(VarId::T(i, j))) = l[static_cast<std::size_t>(j - 1)];
        }
    } else {
        // deg T_i^{l_i} = deg T_{i+1}^{l_{i+1}} for consecutive blocks.
        for (int i = 0; i <= data.r() - 1; ++i) {
            const auto& li = data.block_exponents(i);
            const auto& ln = data.block_exponents(i + 1);
            for (int j = 1; j <= static_cast<int>(li.size()); ++j)
                rows.at(i, column_of(VarId::T(i, j))) = li[static_cast<std::size_t>(j - 1)];
            for (int j = 1; j <= static_cast<int>(ln.size()); ++j)
                rows.at(i, column_of(VarId::T(i + 1, j))) = -ln[static_cast<std::size_t>(j - 1)];
        }
    }
    return GradingGroup::quotient(rows, std::move(coords));
}

VariableGrading VariableGrading::from_group(const GradingGroup& group) {
    VariableGrading w;
    w.free_rank_ = group.free_rank();
    w.moduli_ = group.torsion();
    w.zero_ = group.zero();
    for (VarId v : group.coordinates()) w.degrees_.emplace(v, group.degree_of_variable(v));
    return w;
}

VariableGrading VariableGrading::custom(int free_rank, std::vector<mpz_class> moduli,
                                        std::map<VarId, Degree> degrees,
                                        const PresentedAlgebra& alg) {
    VariableGrading w;
    w.free_rank_ = free_rank;
    w.moduli_ = std::move(moduli);
    w.zero_.free.assign(static_cast<std::size_t>(free_rank), 0);
    w.zero_.torsion.assign(w.moduli_.size(), 0);
    for (auto& [v, d] : degrees) {
        if (d.free.size() != static_cast<std::size_t>(free_rank) || d.torsion.size() != w.moduli_.size())
            throw InvalidDataError("degree of " + v.name() + " has the wrong shape");
        w.degrees_.emplace(v, w.reduce(d));
    }
    for (const auto& rel : alg.rels.relations()) {
        auto h = w.degree_of(rel.poly);
        if (!h.homogeneous)
            throw InvalidDataError("relation " + rel.poly.str() + " is not homogeneous in the auxiliary grading");
    }
    return w;
}

const Degree& VariableGrading::degree(VarId v) const {
    if (v.is_param()) return zero_;
    auto it = degrees_.find(v);
    if (it == degrees_.end())
        throw UnknownVariableError(v.name(), "variable " + v.name() + " has no assigned degree");
    return it->second;
}

Degree VariableGrading::zero() const { return zero_; }

Degree VariableGrading::reduce(Degree d) const {
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        mpz_fdiv_r(d.torsion[i].get_mpz_t(), d.torsion[i].get_mpz_t(), moduli_[i].get_mpz_t());
    return d;
}

Degree VariableGrading::add(const Degree& a, const Degree& b) const {
    Degree d = a;
    for (std::size_t i = 0; i < d.free.size(); ++i) d.free[i] += b.free[i];
    for (std::size_t i = 0; i < d.torsion.size(); ++i) d.torsion[i] += b.torsion[i];
    return reduce(std::move(d));
}

Degree VariableGrading::subtract(const Degree& a, const Degree& b) const {
    Degree d = a;
    for (std::size_t i = 0; i < d.free.size(); ++i) d.free[i] -= b.free[i];
    for (std::size_t i = 0; i < d.torsion.size(); ++i) d.torsion[i] -= b.torsion[i];
    return reduce(std::move(d));
}

Degree VariableGrading::degree_of_monomial(const Monomial& m) const {
    Degree d = zero_;
    for (const auto& [v, e] : m.exponents()) {
        if (v.is_param()) continue;
        const Degree& dv = degree(v);
        for (std::size_t i = 0; i < d.free.size(); ++i) d.free[i] += mpz_class(e) * dv.free[i];
        for (std::size_t i = 0; i < d.torsion.size(); ++i) d.torsion[i] += mpz_class(e) * dv.torsion[i];
    }
    return reduce(std::move(d));
}

VariableGrading::Homogeneity VariableGrading::degree_of(const SparsePolynomial& p) const {
    if (p.is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
    Homogeneity h;
    bool first = true;
    Monomial first_mono;
    for (const auto& [m, c] : p.terms()) {
        Degree d = degree_of_monomial(m);
        if (first) {
            h.degree = std::move(d);
            first_mono = m;
            first = false;
        } else if (!(d == h.degree)) {
            h.homogeneous = false;
            h.offender_a = first_mono;
            h.offender_b = m;
            return h;
        }
    }
    h.homogeneous = true;
    return h;
}

WeightAssignment weight_assignment(const TrinomialData& data) {
    return VariableGrading::from_group(grading_group(data));
}

}  // namespace workbench
