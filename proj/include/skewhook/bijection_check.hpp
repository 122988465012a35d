#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "bicolored.hpp"
#include "identities.hpp"
#include "insertion.hpp"

namespace skewhook {

/// Outcome of the exhaustive check that repeated insertion is a weight-preserving bijection
/// B(mu,lambda) x W(mu,lambda) -> union of B(nu,lambda) over mu < nu <= lambda.
struct BijectionReport {
    std::uint64_t domain_size = 0;
    std::uint64_t codomain_size = 0;
    std::uint64_t image_size = 0;
    std::uint64_t insertions_checked = 0; ///< single insertions whose trace passed check_insertion
    int max_passes = 0;
    bool injective = true;
    bool image_is_codomain = true;
    bool weights_preserved = true;
    bool inverse_round_trip = true;
    bool traces_valid = true;
    bool variables_within_W_lambda = true;
    bool lhs_matches_identity = true;
    bool rhs_matches_identity = true;
    std::optional<std::string> first_failure;

    bool ok() const
    {
        return injective && image_is_codomain && weights_preserved && inverse_round_trip && traces_valid
            && variables_within_W_lambda && lhs_matches_identity && rhs_matches_identity;
    }
};

inline BijectionReport verify_bijection(const Partition& mu, const Partition& lambda)
{
    BijectionReport rep;
    auto fail = [&](bool& flag, const std::string& why) {
        flag = false;
        if (!rep.first_failure)
            rep.first_failure = why;
    };
    if (!contains(mu, lambda)) {
        // both sides are empty
        return rep;
    }

    std::set<BicoloredTableau> codomain;
    MVPoly rhs_weights;
    for (const Partition& nu : covers_within(mu, lambda))
        for_each_B(nu, lambda, [&](const BicoloredTableau& s) {
            codomain.insert(s);
            rhs_weights.add_term(weight(s), 1);
        });
    rep.codomain_size = codomain.size();

    const std::vector<Variable> w = var_set_W(mu, lambda);
    const std::vector<Variable> w_lambda = var_set_W_lambda(lambda);
    const std::uint64_t limit = default_pass_limit(mu, lambda);
    std::set<BicoloredTableau> image;
    MVPoly lhs_weights;

    for_each_B(mu, lambda, [&](const BicoloredTableau& t) {
        for (const Variable& z : w) {
            ++rep.domain_size;
            const Monomial expected = weight(t) * Monomial(z);
            lhs_weights.add_term(expected, 1);
            RepeatedResult r;
            try {
                r = repeated_insert(mu, lambda, t, z, {limit, true});
            } catch (const std::exception& e) {
                fail(rep.image_is_codomain, std::string("repeated_insert threw: ") + e.what());
                continue;
            }
            rep.max_passes = std::max(rep.max_passes, r.passes);
            for (const InsertionPass& p : r.history) {
                if (auto bad = check_insertion(mu, p.input, p.variable, p.result))
                    fail(rep.traces_valid, *bad + " inserting " + p.variable.str() + " into " + p.input.str());
                else
                    ++rep.insertions_checked;
                if (!contains_variable(w_lambda, p.variable))
                    fail(rep.variables_within_W_lambda, p.variable.str() + " outside W(lambda)");
                for (const InsertionStep& st : p.result.trace.steps)
                    if (auto bv = st.bumped_variable(); bv && !contains_variable(w_lambda, *bv))
                        fail(rep.variables_within_W_lambda, bv->str() + " bumped outside W(lambda)");
            }
            if (weight(r.tableau) != expected)
                fail(rep.weights_preserved, "weight changed for " + t.str() + ", " + z.str());
            if (!codomain.count(r.tableau))
                fail(rep.image_is_codomain, "image " + r.tableau.str() + " outside the codomain");
            if (!image.insert(r.tableau).second)
                fail(rep.injective, "collision at " + r.tableau.str());
            try {
                RemoveResult back = repeated_insert_inverse(mu, lambda, r.tableau, {limit, false});
                if (back.tableau != t || back.variable != z)
                    fail(rep.inverse_round_trip, "inverse of " + r.tableau.str() + " gave " + back.tableau.str() + ", "
                                                     + back.variable.str());
            } catch (const std::exception& e) {
                fail(rep.inverse_round_trip, std::string("repeated_insert_inverse threw: ") + e.what());
            }
        }
    });
    rep.image_size = image.size();
    if (image.size() != codomain.size())
        fail(rep.image_is_codomain, "image has " + std::to_string(image.size()) + " elements, codomain "
                                        + std::to_string(codomain.size()));

    const PolyPair sides = thm1_sides(lambda, mu);
    if (lhs_weights != sides.lhs)
        fail(rep.lhs_matches_identity, "domain weight enumerator differs from the identity's left side");
    if (rhs_weights != sides.rhs)
        fail(rep.rhs_matches_identity, "codomain weight enumerator differs from the identity's right side");
    return rep;
}

} // namespace skewhook
