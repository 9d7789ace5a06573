#pragma once

#include <kanex/corpus.hpp>
#include <kanex/kernel.hpp>

namespace fixtures {

using namespace kanex;

/// The chain 0 <= 1 <= 2.
inline auto chain3() -> CatPtr
{
    static const CatPtr c = corpus::chain(3);
    return c;
}

/// Inclusion of the full subposet {1, 2} into the chain.
inline auto upper_inclusion() -> Functor
{
    static const Functor u = full_subcategory(chain3(), {1, 2});
    return u;
}

/// Closure 0 -> 1, 1 -> 1, 2 -> 2 on the chain.
inline auto closure() -> Functor
{
    static const Functor c = build_functor(chain3(), chain3(), {{"0", "1"}, {"1", "1"}, {"2", "2"}}, {});
    return c;
}

}
