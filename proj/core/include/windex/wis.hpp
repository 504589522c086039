#pragma once

#include <string>
#include <vector>

#include "windex/family.hpp"
#include "windex/presentation.hpp"

namespace windex {

enum class Membership { no, yes, indeterminate };

// per orbit class, a sorted list of distinct V-sets
using Collection = std::vector<std::vector<VSet>>;

struct Families {
    Family color;    // c: nonempty levels
    Family unit;     // upsilon: empty set present
    Family fold;     // nabla: two points present
    Family essence;  // epsilon: generated by levels with a non-terminal member
    friend bool operator==(const Families&, const Families&) = default;
};

struct Classification {
    bool one_color = false;
    bool ae_unital = false;
    bool almost_unital = false;
    bool unital = false;
    bool indexing_system = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

class Wis {
public:
    enum class Form { sparse, generated };

    Wis() = default;
    // stores the sparse collection as given; sparse_generate is the checked entry point
    static Wis sparse_unchecked(PresPtr p, Collection sparse);
    // bound 0 picks the default bound
    static Wis generated(PresPtr p, std::vector<VSet> gens, int bound = 0);

    const Presentation& pres() const { return *pres_; }
    const PresPtr& pres_ptr() const { return pres_; }
    Form form() const { return form_; }
    bool is_sparse_form() const { return form_ == Form::sparse; }
    const Collection& sparse() const { return data_; }
    const std::vector<VSet>& generators() const { return gens_; }
    int bound() const { return bound_; }
    // generated form: every member with at most bound() points
    const Collection& table() const { return data_; }

    Membership member(const VSet& s) const;
    bool has(const VSet& s) const { return member(s) == Membership::yes; }

private:
    PresPtr pres_;
    Form form_ = Form::sparse;
    Collection data_;
    std::vector<VSet> gens_;
    int bound_ = 0;
};

int default_bound(const Presentation& p, int query_points = 0);
Collection empty_collection(const Presentation& p);
Collection collect(const Presentation& p, const std::vector<VSet>& sets);
std::vector<VSet> flatten(const Collection& c);

bool is_sparse(const Presentation& p, const VSet& s);
// restrictions along every map (and twist) plus the terminal set wherever nonempty
Collection hat(const Presentation& p, const Collection& c);
// closure under self-indexed coproducts, truncated at bound points; steps < 0 runs to saturation
Collection closure(const Presentation& p, const std::vector<VSet>& gens, int steps, int bound);
// members with at most bound points; throws bound_too_small beyond a generated form's bound
Collection members_within(const Wis& w, int bound);

Families families(const Wis& w);
Classification classify(const Presentation& p, const Families& f);
Classification classify(const Wis& w);

bool operator==(const Wis& a, const Wis& b);
bool leq(const Wis& a, const Wis& b);
Wis meet(const Wis& a, const Wis& b);
Wis join(const Wis& a, const Wis& b);
Wis join_all(const PresPtr& p, const std::vector<Wis>& ws);

struct SparseExtract {
    Wis sparse;
    bool lossy = false;
};
Collection sparse_part(const Wis& w);
SparseExtract sparse_extract(const Wis& w);
// throws not_closed with an escaping coproduct; non-aE-unital closures come back generated
Wis sparse_generate(const PresPtr& p, const Collection& sparse);

struct Decomposition {
    std::vector<int> isotropy;          // slices of V present in S
    std::vector<int> retraction;        // e(U) per isotropy entry
    std::vector<int> retraction_map;    // slice of e(U)'s orbit realizing U -> e(U)
    std::vector<int> reduced_isotropy;  // surviving slices, ascending
    VSet sbar;
    std::vector<VSet> pieces;  // one per orbit copy of sbar
};
Decomposition sparse_decompose(const Presentation& p, const VSet& s);

struct WicValidation {
    std::vector<AxiomResult> axioms;
    // structural axioms only; the conditions IC-i..iv are flags
    bool ok() const;
    bool passes(const std::string& name) const;
};
WicValidation validate_wic(const Wis& w, int bound = 0);

// named systems; families default to every orbit
Wis empty_system(const PresPtr& p);
Wis triv(const PresPtr& p);
Wis zero(const PresPtr& p);
Wis infty(const PresPtr& p);
Wis complete(const PresPtr& p);
Wis triv(const PresPtr& p, Family f);
Wis zero(const PresPtr& p, Family f);
Wis infty(const PresPtr& p, Family f);
Wis complete(const PresPtr& p, Family f);
// E_F: keep the levels in f, empty elsewhere
Wis extend_by_empty(Family f, const Wis& w);
// Bor_F(I) = I meet F_F; same values as E_F(I)
Wis borel(Family f, const Wis& w);
Wis perp_nonunital(const PresPtr& p, Family f, int bound = 0);

// coinduction of a system over O_{C_{p^v}} to the chain presentation target
Wis coinduce_wis(const Wis& slice_system, const PresPtr& target);
// restriction of a chain system to the slice over orbit v
Wis restrict_wis(const Wis& w, int v);

Wis multiplicative_hull(const Wis& w, int product_bound = 4);

std::string describe(const Wis& w);

}  // namespace windex
