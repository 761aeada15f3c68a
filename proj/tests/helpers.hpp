#ifndef PPF_TESTS_HELPERS_HPP
#define PPF_TESTS_HELPERS_HPP

#include <functional>

#include "ppf/errors.hpp"

namespace testutil {

/// True iff fn throws ppf::error with exactly the given code.
inline bool fails_with(const char* code, const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const ppf::error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace testutil

#endif
