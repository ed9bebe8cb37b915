#pragma once

#include <string>

#include "brace.hpp"
#include "construct.hpp"

namespace skewbrace {

struct JsonError : BraceError {
    using BraceError::BraceError;
};

// {"name","order","add","mul"}; the additive identity is relabelled to
// index 0 on ingest when the file uses a different label
Brace brace_from_json_text(const std::string& text);
Brace load_brace_file(const std::string& path);

// {"name","order","additive","actor","action","delta"}
CocycleSpec cocycle_from_json_text(const std::string& text);
CocycleSpec load_cocycle_file(const std::string& path);

// accepts either format, keyed on the fields present
Brace load_any_brace(const std::string& path);

std::string brace_to_json(const Brace& B);

}  // namespace skewbrace
