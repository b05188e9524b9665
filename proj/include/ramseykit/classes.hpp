#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseykit/structures.hpp"
#include "ramseykit/verdict.hpp"

namespace ramseykit {

// Decidable membership predicate standing in for a Fraïssé class (or an order
// expansion of one). Three modes: a fixed builtin registry, a list of
// forbidden induced substructures, or an order expansion of a base class with
// an admissibility predicate drawn from a closed registry.
class ClassSpec {
public:
    enum class Mode { Builtin, Forbidden, OrderExpansion };

    static ClassSpec builtin(const std::string& name); // throws UnknownNameError
    static ClassSpec forbidden(Signature sig, std::vector<Structure> forbidden);
    static ClassSpec order_expansion(ClassSpec base, const std::string& admissibility);

    static const std::vector<std::string>& builtin_names();
    static const std::vector<std::string>& admissibility_names();

    Mode mode() const { return mode_; }
    const Signature& signature() const { return sig_; }
    const std::string& builtin_name() const { return builtin_name_; }
    const std::string& admissibility() const { return admissibility_; }
    const std::vector<Structure>& forbidden_list() const { return forbidden_; }
    std::string describe() const;

    // Membership verdict; throws SignatureMismatchError on signature mismatch.
    bool member(const Structure& A) const;

    // True when membership is preserved by induced substructures. Used to
    // decide when exhausted witness searches may report FAIL rather than
    // INCONCLUSIVE, and to prune enumeration.
    bool is_hereditary() const;

    // For order expansions: the base class in the order-free signature.
    std::optional<ClassSpec> expansion_base() const;
    bool is_order_expansion() const { return expansion_base().has_value(); }

    // Canonical representatives of the members of the given size.
    std::vector<Structure> members_of_size(int n) const;

    bool operator==(const ClassSpec& other) const;

private:
    ClassSpec() = default;

    Mode mode_ = Mode::Builtin;
    Signature sig_;
    std::string builtin_name_;
    std::vector<Structure> forbidden_;
    std::shared_ptr<const ClassSpec> base_;
    std::string admissibility_;
};

// --- axiom checks ----------------------------------------------------------

struct HpCounterexample {
    Structure member;
    std::vector<int> subset;
};

struct HpResult {
    Verdict verdict = Verdict::Pass;
    std::optional<HpCounterexample> counterexample;
    long long structures_checked = 0;
};

// Hereditarity at bounded size: every induced substructure of every member of
// size <= n is a member.
HpResult check_hp(const ClassSpec& K, int n);

struct JepWitness {
    Structure a, b, c;
};

struct JepResult {
    Verdict verdict = Verdict::Pass; // Pass / Fail / Inconclusive
    std::optional<std::pair<Structure, Structure>> counterexample;
    std::vector<JepWitness> witnesses;
};

JepResult check_jep(const ClassSpec& K, int n, int cap);

struct ApCounterexample {
    Structure a, b, c;
    std::vector<int> f, g; // embeddings a->b, a->c
};

struct ApResult {
    Verdict verdict = Verdict::Pass;
    std::optional<ApCounterexample> counterexample;
    long long triples_checked = 0;
};

ApResult check_ap(const ClassSpec& K, int n, int cap);

// --- limit approximation -----------------------------------------------------

// Finite stand-in for the Fraïssé limit: a member with the level-l one-point
// extension property (every embedding of a member of size <= l-1 extends
// along every one-point extension of size <= l).
struct LimitApprox {
    int level = 0;
    Structure carrier;
};

struct LimitBuildResult {
    Verdict status = Verdict::Closed; // Closed | CapExceeded
    LimitApprox approx;
    std::string note;
};

LimitBuildResult build_limit_approx(const ClassSpec& K, int level, int cap);

// One-point extensions of A inside K (each returned structure has size
// |A|+1 with A as the induced substructure on 0..|A|-1).
std::vector<Structure> one_point_extensions(const ClassSpec& K, const Structure& A);

// Definition-level audit of the extension property (independent of the
// builder's missing-extension scan order).
bool has_extension_property(const ClassSpec& K, const Structure& carrier, int level);

// Canonical representatives of induced substructures of F of size <= n.
std::vector<Structure> age(const Structure& F, int n);

} // namespace ramseykit
