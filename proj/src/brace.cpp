#include "skewbrace/brace.hpp"

#include <algorithm>

namespace skewbrace {

void check_group_table(int n, const Table& t, const std::string& which) {
    if ((int)t.size() != n) throw NotAGroup(which + ": table is not n x n");
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        if ((int)t[i].size() != n) throw NotAGroup(which + ": table is not n x n");
        for (int j = 0; j < n; ++j)
            if (t[i][j] < 0 || t[i][j] >= n)
                throw NotAGroup(which + ": entry out of range at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[t[i][j]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw NotAGroup(which + ": row " + std::to_string(i) +
                            " is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[t[j][i]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw NotAGroup(which + ": column " + std::to_string(i) +
                            " is not a permutation");
    }
    for (int j = 0; j < n; ++j)
        if (t[0][j] != j || t[j][0] != j)
            throw IdentityMismatch(which + ": 0 is not the identity (element " +
                                   std::to_string(j) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    throw NotAGroup(which + ": not associative at (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
}

Brace validate_brace(int n, Table add, Table mul, std::string name) {
    if (n <= 0) throw BraceError("order must be positive");
    check_group_table(n, add, "add");
    check_group_table(n, mul, "mul");

    Brace B;
    B.n_ = n;
    B.add_ = std::move(add);
    B.mul_ = std::move(mul);
    B.name_ = std::move(name);
    B.neg_.assign(n, 0);
    B.inv_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (B.add_[i][j] == 0) B.neg_[i] = j;
            if (B.mul_[i][j] == 0) B.inv_[i] = j;
        }
    B.lam_.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            B.lam_[a][b] = B.add_[B.neg_[a]][B.mul_[a][b]];

    // skew distributivity a(b+c) = ab - a + ac; failure reported verbatim
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = B.mul_[a][B.add_[b][c]];
                int rhs = B.add_[B.add_[B.mul_[a][b]][B.neg_[a]]][B.mul_[a][c]];
                if (lhs != rhs)
                    throw DistributivityFailure(
                        "a(b+c) != ab - a + ac at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
            }

    // each lambda_a is an additive automorphism fixing 0, and a -> lambda_a
    // is a homomorphism from (B,.)
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        if (B.lam_[a][0] != 0)
            throw DistributivityFailure("lambda_" + std::to_string(a) +
                                        " does not fix 0");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[B.lam_[a][b]] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw DistributivityFailure("lambda_" + std::to_string(a) +
                                        " is not a permutation");
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (B.lam_[a][B.add_[b][c]] !=
                    B.add_[B.lam_[a][b]][B.lam_[a][c]])
                    throw DistributivityFailure(
                        "lambda_" + std::to_string(a) + " not additive at (" +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = B.mul_[a][b];
            for (int x = 0; x < n; ++x)
                if (B.lam_[ab][x] != B.lam_[a][B.lam_[b][x]])
                    throw DistributivityFailure(
                        "lambda not multiplicative at (" + std::to_string(a) +
                        "," + std::to_string(b) + ")");
            // ab = a + a*b + b
            if (B.mul_[a][b] != B.add_[B.add_[a][B.star(a, b)]][b])
                throw DistributivityFailure("ab != a + a*b + b at (" +
                                            std::to_string(a) + "," +
                                            std::to_string(b) + ")");
        }
    return B;
}

int star_checked(const Brace& B, int a, int b) {
    if (a < 0 || a >= B.order() || b < 0 || b >= B.order())
        throw IndexOutOfRange("element index out of range");
    return B.star(a, b);
}

IdentityAudit identity_audit(const Brace& B) {
    IdentityAudit r;
    int n = B.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ++r.triples_checked;
                // (1): (ab)*c = a*(b*c) + b*c + a*c
                int bc = B.star(b, c);
                int lhs1 = B.star(B.mul(a, b), c);
                int rhs1 = B.add(B.add(B.star(a, bc), bc), B.star(a, c));
                // (2): ab = a + a*b + b
                int lhs2 = B.mul(a, b);
                int rhs2 = B.add(B.add(a, B.star(a, b)), b);
                // (3): a*(b+c) = a*b + b + a*c - b
                int lhs3 = B.star(a, B.add(b, c));
                int rhs3 = B.sub(B.add(B.add(B.star(a, b), b), B.star(a, c)), b);
                int bad = lhs1 != rhs1 ? 1 : lhs2 != rhs2 ? 2 : lhs3 != rhs3 ? 3 : 0;
                if (bad) {
                    r.pass = false;
                    r.witness = {a, b, c};
                    r.failed_identity = bad;
                    return r;
                }
            }
    return r;
}

bool is_trivial(const Brace& B) {
    return B.add_table() == B.mul_table();
}

}  // namespace skewbrace
