#pragma once
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elemset.hpp"

namespace skewbrace {

using Table = std::vector<std::vector<int>>;

struct BraceError : std::runtime_error {
    explicit BraceError(const std::string& m) : std::runtime_error(m) {}
};
struct NotAGroup : BraceError {
    using BraceError::BraceError;
};
struct IdentityMismatch : BraceError {
    using BraceError::BraceError;
};
struct DistributivityFailure : BraceError {
    using BraceError::BraceError;
};
struct IndexOutOfRange : BraceError {
    using BraceError::BraceError;
};
struct CocycleIdentityFailure : BraceError {
    using BraceError::BraceError;
};
struct DeltaNotBijective : BraceError {
    using BraceError::BraceError;
};
struct ActionNotHomomorphism : BraceError {
    using BraceError::BraceError;
};
struct NotRegular : BraceError {
    using BraceError::BraceError;
};
struct NotASubgroup : BraceError {
    using BraceError::BraceError;
};
struct OrderTooLarge : BraceError {
    using BraceError::BraceError;
};
struct NotAnIdeal : BraceError {
    using BraceError::BraceError;
};
struct NotASubbrace : BraceError {
    using BraceError::BraceError;
};
struct NotNested : BraceError {
    using BraceError::BraceError;
};

// Immutable finite left skew brace on {0,...,n-1} with 0 the shared
// identity.  All caches are built and all axioms verified by exhaustion
// at construction; obtain instances through validate_brace or the
// constructors in construct.hpp.
class Brace {
public:
    int order() const { return n_; }
    const std::string& name() const { return name_; }

    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const { return inv_[a]; }
    int lambda(int a, int b) const { return lam_[a][b]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }
    // a*b = -a + ab - b = lambda_a(b) - b
    int star(int a, int b) const { return add_[lam_[a][b]][neg_[b]]; }

    const Table& add_table() const { return add_; }
    const Table& mul_table() const { return mul_; }
    const Table& lambda_table() const { return lam_; }

    friend Brace validate_brace(int order, Table add, Table mul,
                                std::string name);

private:
    Brace() = default;
    int n_ = 0;
    Table add_, mul_, lam_;
    std::vector<int> neg_, inv_;
    std::string name_;
};

Brace validate_brace(int order, Table add, Table mul, std::string name = "");

// checked element access for CLI-facing paths
int star_checked(const Brace& B, int a, int b);

struct IdentityAudit {
    bool pass = true;
    long triples_checked = 0;
    std::optional<std::array<int, 3>> witness;  // first failing (a,b,c)
    int failed_identity = 0;                    // 1, 2 or 3
};

// exhaustively re-checks the three star-product identities
IdentityAudit identity_audit(const Brace& B);

bool is_trivial(const Brace& B);  // add == mul, equivalently star == 0

// verifies a Cayley table is a group with identity 0; throws NotAGroup /
// IdentityMismatch with a witness description
void check_group_table(int n, const Table& t, const std::string& which);

}  // namespace skewbrace
