#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "windex/group.hpp"

namespace windex {

struct ChainGroup {
    int p = 2;
    int n = 1;
};
struct FiniteGroupSpec {
    std::vector<std::vector<int>> cayley_table;
    int max_order = 60;
};
struct MeetSemilattice {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> meet_table;
};
struct OneObjectGroupoid {
    int group_order = 1;
};
struct TrivialPoint {};

using BackendSpec =
    std::variant<ChainGroup, FiniteGroupSpec, MeetSemilattice, OneObjectGroupoid, TrivialPoint>;

enum class Backend { chain, group, semilattice, groupoid, point, custom };

// A slice orbit of V: a structure map U -> V up to iso over V.
struct Slice {
    std::string id;
    int orbit = 0;   // the orbit class U
    int points = 1;  // number of points of U as a V-set
};

// A finite V-set up to isomorphism: multiplicities indexed by the slices of V.
struct VSet {
    int over = 0;
    std::vector<int> mult;
    friend auto operator<=>(const VSet&, const VSet&) = default;
};

// Concrete group data behind a group-type presentation.
struct GroupModel {
    FiniteGroup group;
    std::vector<FiniteGroup::Subgroup> orbit_rep;
    std::vector<std::vector<FiniteGroup::Subgroup>> slice_rep;  // subgroups of orbit_rep[v]
    std::vector<std::vector<int>> slice_conj;  // g with g K g^-1 = orbit_rep[slice.orbit]
};

class Presentation {
public:
    std::string name;
    Backend backend = Backend::custom;
    std::optional<ChainGroup> chain;
    std::vector<std::string> orbit_ids;
    std::vector<std::vector<Slice>> slices;
    std::vector<int> star;                 // index of the identity slice per orbit
    std::vector<std::vector<char>> hom;    // hom[u][v]: some map u -> v
    // res[v][f][w]: multiplicities over slices of slices[v][f].orbit
    std::vector<std::vector<std::vector<std::vector<int>>>> res;
    // ind[v][u][x]: slice of v given by composing x (slice of U) with u
    std::vector<std::vector<std::vector<int>>> ind;
    // slice permutations induced by automorphisms of v (identity omitted)
    std::vector<std::vector<std::vector<int>>> auts;
    std::optional<GroupModel> group;

    // derived by finalize()
    std::vector<std::vector<std::vector<char>>> slice_hom;  // [v][a][b]: map a -> b over v
    std::vector<std::vector<VSet>> sparse_universe;
    int sparse_bound = 1;
    int max_slice_points = 1;
    bool abelian = true;

    void finalize(std::size_t sparse_cap = 1u << 16);

    int orbit_count() const { return static_cast<int>(orbit_ids.size()); }
    int slice_count(int v) const { return static_cast<int>(slices[v].size()); }
    int orbit_index(std::string_view id) const;
    int slice_index(int v, std::string_view id) const;
    // first slice of v with underlying orbit u; -1 if none
    int slice_over(int v, int u) const;

    VSet empty(int v) const;
    VSet terminal(int v) const { return copies(v, 1); }
    VSet copies(int v, int n) const;
    VSet orbit(int v, int slice, int n = 1) const;
    int points(const VSet& s) const;
    std::string str(const VSet& s) const;
    bool is_group() const { return group.has_value(); }
};

using PresPtr = std::shared_ptr<const Presentation>;

PresPtr build_presentation(const BackendSpec& spec);
PresPtr chain_presentation(int p, int n);
// same orbits, slices and tables; names and backend tags are ignored
bool same_tables(const Presentation& a, const Presentation& b);

struct AxiomResult {
    AxiomResult(std::string n = {}, bool ok = true, std::string w = {})
        : name(std::move(n)), pass(ok), witness(std::move(w)) {}
    std::string name;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<AxiomResult> axioms;
    bool ok() const;
    const AxiomResult* find(std::string_view name) const;
};

ValidationReport validate_presentation(const Presentation& p);

// Res along slice f of s.over
VSet restrict_vset(const Presentation& p, int f, const VSet& s);
// Res to orbit l along the first map l -> s.over; throws no_such_map
VSet restrict_to(const Presentation& p, int l, const VSet& s);
VSet twist(const VSet& s, const std::vector<int>& perm);
// Ind along slice u of v; t is over slices[v][u].orbit
VSet induce(const Presentation& p, int v, int u, const VSet& t);
// one entry per orbit copy, in slice order
std::vector<int> expand_orbits(const VSet& s);
VSet indexed_coproduct(const Presentation& p, const VSet& s, const std::vector<VSet>& t);
bool sset_leq(const VSet& a, const VSet& b);
VSet vset_sum(const VSet& a, const VSet& b);
// all V-sets over v with at most max_points points
std::vector<VSet> vsets_within(const Presentation& p, int v, int max_points);

}  // namespace windex
