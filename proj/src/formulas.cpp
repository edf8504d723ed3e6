#include "ccn/formulas.hpp"

namespace ccn {

namespace {

long long exactDiv(long long num, long long den)
{
    if (num % den != 0)
        throw std::logic_error("claim table division is not exact: " +
                               std::to_string(num) + "/" + std::to_string(den));
    return num / den;
}

ClaimRecord claim(Family f, long long n, bool even, long long cn, long long cnc)
{
    ClaimRecord r;
    r.family = f;
    r.n = static_cast<int>(n);
    r.cn = cn;
    r.cnc = cnc;
    r.source = familyName(f) + (even ? "/even" : "/odd");
    return r;
}

}  // namespace

UnsupportedParameterError::UnsupportedParameterError(const std::string& family, int n,
                                                     int minimum)
    : std::invalid_argument("no claim for " + family + " below n=" +
                            std::to_string(minimum) + ", got " + std::to_string(n))
{
}

int claimMinimumN(Family f)
{
    return f == Family::Path ? 2 : 3;
}

ClaimRecord claimedValues(Family f, int nIn)
{
    if (nIn < claimMinimumN(f))
        throw UnsupportedParameterError(familyName(f), nIn, claimMinimumN(f));

    const long long n = nIn;
    const bool even = n % 2 == 0;

    switch (f) {
        case Family::Path:
            return even ? claim(f, n, even, n / 2, exactDiv(n * n, 4))
                        : claim(f, n, even, (n + 1) / 2, exactDiv(n * n - 1, 4));
        case Family::Cycle:
            return even ? claim(f, n, even, n / 2, exactDiv(n * n, 4))
                        : claim(f, n, even, (n - 1) / 2, exactDiv((n - 1) * (n - 1), 4));
        case Family::Wheel: {
            // Hub adds a singleton class, so the rim cycle's values carry over.
            ClaimRecord rim = claimedValues(Family::Cycle, nIn);
            rim.family = f;
            rim.source = familyName(f) + (even ? "/even" : "/odd") + " (rim cycle)";
            return rim;
        }
        case Family::DoubleWheel:
        case Family::ClosedHelm:
        case Family::Djembe:
            return even ? claim(f, n, even, n, n * n)
                        : claim(f, n, even, n - 1, 2 * (n - 1) * (n - 1));
        case Family::Helm:
            return even ? claim(f, n, even, n + 1, exactDiv(n * n * n + n * n, 4))
                        : claim(f, n, even, n + 1,
                                exactDiv((n - 1) * (n - 1) * (n + 1), 4));
        case Family::Flower:
            return even ? claim(f, n, even, n, exactDiv(n * n * n, 4))
                        : claim(f, n, even, n, exactDiv(n * (n - 1) * (n - 1), 4));
        case Family::Sunflower:
            return even ? claim(f, n, even, n + 1, exactDiv((n + 1) * n * n, 4))
                        : claim(f, n, even, n + 1,
                                exactDiv((n + 1) * (n - 1) * (n - 1), 4));
        case Family::ClosedSunflower:
            return even ? claim(f, n, even, (n + 2) / 2, exactDiv(n * n * n * (n + 2), 16))
                        : claim(f, n, even, (n + 1) / 2,
                                exactDiv((n + 1) * (n + 1) * (n + 1) * (n - 1), 16));
        case Family::Antiprism:
            return even ? claim(f, n, even, n / 2, exactDiv(n * n * n * n, 16))
                        : claim(f, n, even, (n + 1) / 2,
                                exactDiv((n * n - 1) * (n * n - 1), 16));
        case Family::Blossom:
            return even ? claim(f, n, even, n / 2, exactDiv(n * n * n * n, 16))
                        : claim(f, n, even, (n - 1) / 2,
                                exactDiv((n * n - 1) * (n * n - 1), 16));
    }
    throw std::logic_error("unreachable");
}

}  // namespace ccn
