#pragma once
#include <cstdlib>
#include <string>
#include <vector>

#include "skewbrace/construct.hpp"
#include "skewbrace/json_io.hpp"

namespace testhelp {

inline std::string fixtures_dir() {
    const char* d = std::getenv("FIXTURES_DIR");
    return d ? d : "fixtures";
}

inline skewbrace::Brace load_fixture(const std::string& id) {
    return skewbrace::from_cocycle(
        skewbrace::load_cocycle_file(fixtures_dir() + "/" + id +
                                     ".cocycle.json"));
}

inline skewbrace::ElemSet make_set(int n, const std::vector<int>& xs) {
    skewbrace::ElemSet s(n);
    for (int x : xs) s.add(x);
    return s;
}

// trivial brace on the symmetric group of degree 3; the smallest brace
// whose additive group is non-abelian
inline skewbrace::Brace s3_trivial() {
    for (const auto& t : skewbrace::groups_of_order(6)) {
        bool abelian = true;
        for (int a = 0; a < 6 && abelian; ++a)
            for (int b = 0; b < 6; ++b)
                if (t[a][b] != t[b][a]) {
                    abelian = false;
                    break;
                }
        if (!abelian) return skewbrace::trivial_brace(t, "s3");
    }
    throw std::runtime_error("no non-abelian group of order 6");
}

}  // namespace testhelp
