#include "workbench/rigidity.hpp"

#include "workbench/errors.hpp"

namespace workbench {

std::string to_string(RigidityClause clause) {
    switch (clause) {
        case RigidityClause::MNonzero: return "m-nonzero";
        case RigidityClause::Type1Clause2: return "type1-clause2";
        case RigidityClause::Type2Clause3a: return "type2-clause3a";
        case RigidityClause::Type2Clause3b: return "type2-clause3b";
        default: return "none";
    }
}

namespace {

// Smallest position with the given exponent, or 0.
int position_with(const TrinomialData& data, int block, int value) {
    const auto& l = data.block_exponents(block);
    for (int j = 1; j <= static_cast<int>(l.size()); ++j)
        if (l[static_cast<std::size_t>(j - 1)] == value) return j;
    return 0;
}

bool all_even(const TrinomialData& data, int block) {
    for (int e : data.block_exponents(block))
        if (e % 2 != 0) return false;
    return true;
}

// Clause 3b role of a and b: an exponent exactly 2, all exponents even.
bool even_block_with_two(const TrinomialData& data, int block) {
    return all_even(data, block) && position_with(data, block, 2) != 0;
}

}  // namespace

RigidityVerdict rigidity_verdict(const TrinomialData& data, RigidityTarget target) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);

    RigidityVerdict verdict;
    if (target == RigidityTarget::X && data.m != 0) {
        verdict.rigid = false;
        verdict.clause = RigidityClause::MNonzero;
        return verdict;
    }

    const int first = data.first_block(), last = data.last_block();
    if (data.type == 1) {
        for (int a = first; a <= last; ++a) {
            std::map<int, int> j;
            bool ok = true;
            for (int i = first; i <= last && ok; ++i) {
                if (i == a) continue;
                int pos = position_with(data, i, 1);
                if (pos == 0) ok = false;
                else j[i] = pos;
            }
            if (ok) {
                verdict.rigid = false;
                verdict.clause = RigidityClause::Type1Clause2;
                verdict.a = a;
                verdict.j = std::move(j);
                return verdict;
            }
        }
        return verdict;
    }

    // Type 2, clause 3a.
    for (int a = first; a <= last; ++a) {
        for (int b = a + 1; b <= last; ++b) {
            std::map<int, int> j;
            bool ok = true;
            for (int i = first; i <= last && ok; ++i) {
                if (i == a || i == b) continue;
                int pos = position_with(data, i, 1);
                if (pos == 0) ok = false;
                else j[i] = pos;
            }
            if (ok) {
                verdict.rigid = false;
                verdict.clause = RigidityClause::Type2Clause3a;
                verdict.a = a;
                verdict.b = b;
                verdict.j = std::move(j);
                return verdict;
            }
        }
    }
    // Clause 3b: a and b carry the even-with-2 condition, c is only excluded.
    for (int a = first; a <= last; ++a) {
        if (!even_block_with_two(data, a)) continue;
        for (int b = a + 1; b <= last; ++b) {
            if (!even_block_with_two(data, b)) continue;
            for (int c = first; c <= last; ++c) {
                if (c == a || c == b) continue;
                std::map<int, int> j;
                bool ok = true;
                for (int k = first; k <= last && ok; ++k) {
                    if (k == a || k == b || k == c) continue;
                    int pos = position_with(data, k, 1);
                    if (pos == 0) ok = false;
                    else j[k] = pos;
                }
                if (ok) {
                    verdict.rigid = false;
                    verdict.clause = RigidityClause::Type2Clause3b;
                    verdict.a = a;
                    verdict.b = b;
                    verdict.c = c;
                    verdict.j = std::move(j);
                    verdict.v[a] = position_with(data, a, 2);
                    verdict.v[b] = position_with(data, b, 2);
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

bool recheck_witness(const TrinomialData& data, RigidityTarget target, const RigidityVerdict& verdict) {
    auto exp_at = [&](int block, int pos) {
        const auto& l = data.block_exponents(block);
        if (pos < 1 || pos > static_cast<int>(l.size())) return -1;
        return l[static_cast<std::size_t>(pos - 1)];
    };
    const int first = data.first_block(), last = data.last_block();
    switch (verdict.clause) {
        case RigidityClause::None:
            return verdict.rigid;
        case RigidityClause::MNonzero:
            return target == RigidityTarget::X && data.m != 0;
        case RigidityClause::Type1Clause2: {
            if (data.type != 1 || verdict.a < first || verdict.a > last) return false;
            for (int i = first; i <= last; ++i) {
                if (i == verdict.a) continue;
                auto it = verdict.j.find(i);
                if (it == verdict.j.end() || exp_at(i, it->second) != 1) return false;
            }
            return true;
        }
        case RigidityClause::Type2Clause3a: {
            if (data.type != 2) return false;
            if (verdict.a < first || verdict.b > last || verdict.a == verdict.b) return false;
            for (int i = first; i <= last; ++i) {
                if (i == verdict.a || i == verdict.b) continue;
                auto it = verdict.j.find(i);
                if (it == verdict.j.end() || exp_at(i, it->second) != 1) return false;
            }
            return true;
        }
        case RigidityClause::Type2Clause3b: {
            if (data.type != 2) return false;
            int a = verdict.a, b = verdict.b, c = verdict.c;
            if (a == b || a == c || b == c) return false;
            if (a < first || b < first || c < first || a > last || b > last || c > last) return false;
            for (int i : {a, b}) {
                auto it = verdict.v.find(i);
                if (it == verdict.v.end() || exp_at(i, it->second) != 2) return false;
                if (!all_even(data, i)) return false;
            }
            for (int k = first; k <= last; ++k) {
                if (k == a || k == b || k == c) continue;
                auto it = verdict.j.find(k);
                if (it == verdict.j.end() || exp_at(k, it->second) != 1) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace workbench
