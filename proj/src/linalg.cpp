#include "ident/linalg.hpp"

#include <stdexcept>

namespace ident {

namespace {

// Bareiss elimination over exact polynomial entries; pivots are the first
// nonzero entry in the current column (any choice is rank-safe).
size_t bareiss_rank(Matrix<MPoly> m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const RingPtr ring = m.at(0, 0).ring();
    MPoly prev = mpoly_const(ring, Rational(1));
    size_t rank = 0, pr = 0;
    for (size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        size_t pivot = pr;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != pr)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(pr, j));
        for (size_t i = pr + 1; i < m.rows(); ++i) {
            for (size_t j = col + 1; j < m.cols(); ++j) {
                MPoly num = m.at(i, j) * m.at(pr, col) - m.at(i, col) * m.at(pr, j);
                m.at(i, j) = num.is_zero() ? num : divexact(num, prev);
            }
            m.at(i, col) = MPoly(ring);
        }
        prev = m.at(pr, col);
        ++rank;
        ++pr;
    }
    return rank;
}

}  // namespace

size_t rank_symbolic(const Matrix<RatFunc>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const RingPtr ring = m.at(0, 0).ring();
    Matrix<MPoly> cleared(m.rows(), m.cols(), MPoly(ring));
    for (size_t i = 0; i < m.rows(); ++i) {
        MPoly den = mpoly_const(ring, Rational(1));
        for (size_t j = 0; j < m.cols(); ++j) den = lcm(den, m.at(i, j).den());
        for (size_t j = 0; j < m.cols(); ++j)
            cleared.at(i, j) = m.at(i, j).num() * divexact(den, m.at(i, j).den());
    }
    return bareiss_rank(std::move(cleared));
}

size_t rank_symbolic(const Matrix<Rational>& m) {
    Matrix<Rational> a = m;
    size_t rank = 0, pr = 0;
    for (size_t col = 0; col < a.cols() && pr < a.rows(); ++col) {
        size_t pivot = pr;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != pr)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(pr, j));
        for (size_t i = pr + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) / a.at(pr, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pr, j);
        }
        ++rank;
        ++pr;
    }
    return rank;
}

uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int64_t Rng::uniform(int64_t lo, int64_t hi) {
    uint64_t span = (uint64_t)(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + (int64_t)(v % span);
}

size_t rank_probabilistic(const Matrix<RatFunc>& m, uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("rank_probabilistic: trials must be >= 1");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const RingPtr ring = m.at(0, 0).ring();
    Rng rng(seed);
    const int64_t bound = int64_t(1) << 31;
    size_t best = 0;
    for (int t = 0; t < trials; ++t) {
        Matrix<Rational> num(m.rows(), m.cols(), Rational(0));
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            std::vector<Rational> point;
            point.reserve(ring->nvars());
            for (size_t i = 0; i < ring->nvars(); ++i)
                point.emplace_back((long)rng.uniform(-bound, bound));
            ok = true;
            for (size_t i = 0; i < m.rows() && ok; ++i)
                for (size_t j = 0; j < m.cols() && ok; ++j) {
                    Rational d = eval(m.at(i, j).den(), point);
                    if (d.is_zero()) {
                        ok = false;
                        break;
                    }
                    num.at(i, j) = eval(m.at(i, j).num(), point) / d;
                }
        }
        if (!ok) throw std::runtime_error("rank_probabilistic: could not avoid denominator zeros");
        best = std::max(best, rank_symbolic(num));
    }
    return best;
}

}  // namespace ident
