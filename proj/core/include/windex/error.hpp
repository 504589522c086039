#pragma once

#include <stdexcept>
#include <string>

namespace windex {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define WINDEX_ERROR(name)                                   \
    struct name : error {                                    \
        explicit name(const std::string& what) : error(what) {} \
    };

WINDEX_ERROR(invalid_spec)
WINDEX_ERROR(too_large)
WINDEX_ERROR(no_such_map)
WINDEX_ERROR(mismatched_index)
WINDEX_ERROR(not_a_subgroup)
WINDEX_ERROR(unsupported_backend)
WINDEX_ERROR(bound_too_small)
WINDEX_ERROR(not_closed)
WINDEX_ERROR(mixed_presentation)
WINDEX_ERROR(invalid_family)
WINDEX_ERROR(not_unital)
WINDEX_ERROR(not_admissible)
WINDEX_ERROR(target_not_above)
WINDEX_ERROR(group_mismatch)

#undef WINDEX_ERROR

}  // namespace windex
