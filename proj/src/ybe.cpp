#include "skewbrace/ybe.hpp"

namespace skewbrace {

YBESolution solution_from_brace(const Brace& B) {
    int n = B.order();
    YBESolution s;
    s.n = n;
    s.first.assign(n, std::vector<int>(n));
    s.second.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int u = B.lambda(a, b);
            s.first[a][b] = u;
            s.second[a][b] = B.mul(B.inv(u), B.mul(a, b));
        }
    s.braid = check_braid(s).holds;
    s.nondegenerate_left = true;
    s.nondegenerate_right = true;
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n; ++b) {
            row[s.first[a][b]] = 1;
            col[s.second[b][a]] = 1;
        }
        for (int b = 0; b < n; ++b) {
            if (!row[b]) s.nondegenerate_left = false;
            if (!col[b]) s.nondegenerate_right = false;
        }
    }
    return s;
}

BraidVerdict check_braid(const YBESolution& sol) {
    int n = sol.n;
    BraidVerdict v;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // r12 r23 r12 applied to (a,b,c)
                int x = sol.first[a][b], y = sol.second[a][b], z = c;
                int y2 = sol.first[y][z], z2 = sol.second[y][z];
                int x3 = sol.first[x][y2], y3 = sol.second[x][y2];
                // r23 r12 r23 applied to (a,b,c)
                int q = sol.first[b][c], r = sol.second[b][c];
                int p2 = sol.first[a][q], q2 = sol.second[a][q];
                int r3 = sol.first[q2][r], s3 = sol.second[q2][r];
                if (x3 != p2 || y3 != r3 || z2 != s3) {
                    v.holds = false;
                    v.witness = {a, b, c};
                    return v;
                }
            }
    v.holds = true;
    return v;
}

}  // namespace skewbrace
