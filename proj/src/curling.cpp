#include "ccn/curling.hpp"

#include <limits>

namespace ccn {

namespace {

long long checkedMul(long long a, long long b)
{
    if (a != 0 && b > std::numeric_limits<long long>::max() / a)
        throw std::overflow_error("curling product overflows 64 bits");
    return a * b;
}

}  // namespace

CurlingResult curlingNumbers(const Graph& g)
{
    if (g.vertexCount() == 0) throw std::invalid_argument("empty graph");
    CurlingResult r{0, 1, degreeSequence(g)};
    for (const auto& run : r.runs.runs) {
        r.cn = std::max<long long>(r.cn, run.count);
        r.cnCompound = checkedMul(r.cnCompound, run.count);
    }
    return r;
}

}  // namespace ccn
