#ifndef EULERPART_IDENTITIES_HPP
#define EULERPART_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "eulerpart/series.hpp"

namespace eulerpart {

/* One verifiable generating-function identity: both sides are
 * materialized independently as truncated series and compared
 * coefficient by coefficient. */
struct Identity {
    std::string id;
    std::string description;
    Grading grading;
    long long default_order;
    std::function<TruncatedSeries(long long)> lhs;
    std::function<TruncatedSeries(long long)> rhs;
};

/* The full catalog: E1.1-E1.5, E2.1, E4.1-E4.5. */
const std::vector<Identity>& identity_catalog();

/* Lookup by id; throws std::invalid_argument on unknown ids. */
const Identity& find_identity(const std::string& id);

} // namespace eulerpart

#endif
