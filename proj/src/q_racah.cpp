#include <algorithm>
#include <cmath>
#include <vector>

#include "mtcat/catalog.hpp"

namespace mtcat::su2 {

namespace {

// [0]! .. [n]! at a fixed level.
class QFactorials {
public:
    QFactorials(int level, int max_n) : level_(level), table_(static_cast<std::size_t>(max_n) + 1, 1.0)
    {
        for (int i = 1; i <= max_n; ++i)
            table_[i] = table_[i - 1] * quantum_integer(level, i);
    }

    Scalar operator()(int n) const
    {
        if (n < 0 || n >= static_cast<int>(table_.size()))
            throw InputError("q-factorial argument out of range at level " + std::to_string(level_));
        return table_[n];
    }

private:
    int level_;
    std::vector<Scalar> table_;
};

const QFactorials& factorials(int level)
{
    // Largest argument in the Racah sum is j1+j2+j3+j+1 <= 2k+1 in spins.
    static const std::vector<QFactorials> tables = [] {
        std::vector<QFactorials> t;
        for (int k = 0; k <= 12; ++k)
            t.emplace_back(k, 4 * k + 4);
        return t;
    }();
    if (level < 0 || level >= static_cast<int>(tables.size()))
        throw InputError("su2 level " + std::to_string(level) + " is outside 0..12");
    return tables[level];
}

// Triangle coefficient Delta(a,b,c) for twice-spins.
Scalar triangle(const QFactorials& fact, int a, int b, int c)
{
    return std::sqrt(fact((a + b - c) / 2) * fact((a - b + c) / 2) * fact((-a + b + c) / 2)
                     / fact((a + b + c) / 2 + 1));
}

}  // namespace

bool admissible(int level, int a, int b, int c)
{
    for (int x : {a, b, c})
        if (x < 0 || x > level)
            return false;
    return (a + b + c) % 2 == 0 && c >= std::abs(a - b) && c <= a + b && a + b + c <= 2 * level;
}

Scalar quantum_integer(int level, int n)
{
    const int h = level + 2;
    if (n % h == 0)
        return 0;
    return std::sin(n * kPi / h) / std::sin(kPi / h);
}

Scalar q_racah_6j(int level, int j1, int j2, int j12, int j3, int j, int j23)
{
    if (!admissible(level, j1, j2, j12) || !admissible(level, j12, j3, j) || !admissible(level, j2, j3, j23)
        || !admissible(level, j1, j23, j))
        throw InputError("inadmissible triad in q-6j symbol at level " + std::to_string(level));
    const QFactorials& fact = factorials(level);

    // Triangle sums and quadrilateral sums, in spins.
    const int t1 = (j1 + j2 + j12) / 2, t2 = (j12 + j3 + j) / 2, t3 = (j2 + j3 + j23) / 2, t4 = (j1 + j23 + j) / 2;
    const int q1 = (j1 + j2 + j3 + j) / 2, q2 = (j1 + j3 + j12 + j23) / 2, q3 = (j2 + j + j12 + j23) / 2;

    Scalar sum = 0;
    for (int z = std::max({t1, t2, t3, t4}); z <= std::min({q1, q2, q3}); ++z) {
        const Scalar denom = fact(z - t1) * fact(z - t2) * fact(z - t3) * fact(z - t4) * fact(q1 - z) * fact(q2 - z)
                             * fact(q3 - z);
        if (denom == 0)
            throw ComputationError("vanishing q-factorial in the Racah sum");
        sum += (z % 2 == 0 ? 1 : -1) * fact(z + 1) / denom;
    }
    return triangle(fact, j1, j2, j12) * triangle(fact, j12, j3, j) * triangle(fact, j2, j3, j23)
           * triangle(fact, j1, j23, j) * sum;
}

Scalar fusing_entry(int level, int a, int b, int c, int d, int x, int y)
{
    const Scalar sign = ((a + b + c + d) / 2) % 2 == 0 ? 1 : -1;
    return sign * std::sqrt(quantum_integer(level, x + 1) * quantum_integer(level, y + 1))
           * q_racah_6j(level, a, b, x, c, d, y);
}

}  // namespace mtcat::su2
