#include "skewbrace/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skewbrace {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw JsonError("malformed JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Table table_field(const json& j, const char* key, int n) {
    if (!j.contains(key) || !j[key].is_array())
        throw JsonError(std::string("missing table \"") + key + "\"");
    Table t;
    for (const auto& row : j[key]) {
        t.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw JsonError("non-integer entry");
            t.back().push_back(v.get<int>());
        }
    }
    if ((int)t.size() != n) throw JsonError("table size disagrees with order");
    return t;
}

}  // namespace

Brace brace_from_json_text(const std::string& text) {
    json j = parse(text);
    if (!j.contains("order")) throw JsonError("missing \"order\"");
    int n = j["order"].get<int>();
    Table add = table_field(j, "add", n);
    Table mul = table_field(j, "mul", n);
    std::string name = j.value("name", "");
    // locate the additive identity and relabel it to 0 if needed
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool id = true;
        for (int x = 0; x < n; ++x)
            if (x >= (int)add[c].size() || add[c][x] != x) {
                id = false;
                break;
            }
        if (id) e = c;
    }
    if (e > 0) {
        auto relab = [&](int x) { return x == e ? 0 : x == 0 ? e : x; };
        Table add2(n, std::vector<int>(n)), mul2(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                add2[relab(a)][relab(b)] = relab(add[a][b]);
                mul2[relab(a)][relab(b)] = relab(mul[a][b]);
            }
        add = std::move(add2);
        mul = std::move(mul2);
    }
    return validate_brace(n, add, mul, name);
}

CocycleSpec cocycle_from_json_text(const std::string& text) {
    json j = parse(text);
    if (!j.contains("order")) throw JsonError("missing \"order\"");
    int n = j["order"].get<int>();
    CocycleSpec spec;
    spec.name = j.value("name", "");
    spec.additive = table_field(j, "additive", n);
    spec.actor = table_field(j, "actor", n);
    spec.action = table_field(j, "action", n);
    if (!j.contains("delta")) throw JsonError("missing \"delta\"");
    for (const auto& v : j["delta"]) spec.delta.push_back(v.get<int>());
    return spec;
}

Brace load_brace_file(const std::string& path) {
    return brace_from_json_text(slurp(path));
}

CocycleSpec load_cocycle_file(const std::string& path) {
    return cocycle_from_json_text(slurp(path));
}

Brace load_any_brace(const std::string& path) {
    std::string text = slurp(path);
    json j = parse(text);
    if (j.contains("actor")) return from_cocycle(cocycle_from_json_text(text));
    return brace_from_json_text(text);
}

std::string brace_to_json(const Brace& B) {
    nlohmann::ordered_json j;
    j["name"] = B.name();
    j["order"] = B.order();
    j["add"] = B.add_table();
    j["mul"] = B.mul_table();
    return j.dump();
}

}  // namespace skewbrace
