#include "windex/fibrations.hpp"

#include "windex/error.hpp"

namespace windex {

FibMap parse_fib_map(const std::string& name) {
    if (name == "color" || name == "c") return FibMap::color;
    if (name == "unit" || name == "upsilon") return FibMap::unit;
    if (name == "fold" || name == "nabla") return FibMap::fold;
    if (name == "transfer" || name == "fR") return FibMap::transfer;
    if (name == "transfer-fold" || name == "transfer_fold" || name == "fR-fold" || name == "combined") return FibMap::transfer_fold;
    throw invalid_spec("unknown map '" + name + "'");
}

std::string fib_map_name(FibMap m) {
    switch (m) {
        case FibMap::color: return "color";
        case FibMap::unit: return "unit";
        case FibMap::fold: return "fold";
        case FibMap::transfer: return "transfer";
        case FibMap::transfer_fold: return "transfer-fold";
    }
    return "?";
}

Wis color_left(const PresPtr& p, Family f) { return triv(p, f); }
Wis unit_left(const PresPtr& p, Family f) { return zero(p, f); }
Wis fold_left(const PresPtr& p, Family f) { return join(zero(p), infty(p, f)); }
Wis transfer_left(const PresPtr& p, const TransferSystem& r) { return overline_F(p, r); }
Wis combined_left(const PresPtr& p, const TransferSystem& r, Family f) {
    return join(overline_F(p, r), fold_left(p, f));
}

Wis color_right(const PresPtr& p, Family f) { return complete(p, f); }
Wis transfer_right(const PresPtr& p, const TransferSystem& r) { return transfer_to_indexing(p, r); }

Wis fold_right(const PresPtr& p, const std::vector<Wis>& unital_poset, Family f) {
    Wis acc = fold_left(p, Family{});
    for (const auto& y : unital_poset)
        if (families(y).fold.subset_of(f)) acc = join(acc, y);
    return acc;
}

AdjointInfo adjoints(FibMap m) {
    switch (m) {
        case FibMap::color: return {"E_F F^triv", "F_F (complete on F)", ""};
        case FibMap::unit:
            return {"E_F F^0", std::nullopt,
                    "no right adjoint: F_{empty-perp-nu} v E_e F^0 is complete although both have no units at the top"};
        case FibMap::fold: return {"F^0 u E_F F^infty", "join of all Y with fold family inside F", ""};
        case FibMap::transfer: return {"overline F_R", "the indexing system of R", ""};
        case FibMap::transfer_fold: return {"overline F_R v F^0 v E_F F^infty", std::nullopt, "left adjoint only"};
    }
    return {};
}

Wis unit_join_witness(const PresPtr& p) {
    Family e;
    e.insert(0);
    return join(perp_nonunital(p, Family{}), zero(p, generated_family(*p, e)));
}

Target fib_image(FibMap m, const Wis& w) {
    const auto f = families(w);
    switch (m) {
        case FibMap::color: return {f.color, {}};
        case FibMap::unit: return {f.unit, {}};
        case FibMap::fold: return {f.fold, {}};
        case FibMap::transfer: return {{}, fR(w)};
        case FibMap::transfer_fold: return {f.fold, fR(w)};
    }
    return {};
}

bool target_leq(FibMap m, const Target& a, const Target& b) {
    switch (m) {
        case FibMap::color:
        case FibMap::unit:
        case FibMap::fold: return a.family.subset_of(b.family);
        case FibMap::transfer: return a.transfer.subset_of(b.transfer);
        case FibMap::transfer_fold: return a.family.subset_of(b.family) && a.transfer.subset_of(b.transfer);
    }
    return false;
}

Wis cocartesian_transport(FibMap m, const Wis& w, const Target& target) {
    const auto& p = w.pres_ptr();
    const auto cls = classify(w);
    if (m == FibMap::unit && !cls.ae_unital) throw invalid_spec("unit transport is defined on aE-unital systems");
    if ((m == FibMap::fold || m == FibMap::transfer || m == FibMap::transfer_fold) && !cls.unital)
        throw not_unital("transport along " + fib_map_name(m) + " needs a unital system");
    if (m != FibMap::transfer) require_family(*p, target.family);
    if (m == FibMap::transfer || m == FibMap::transfer_fold) {
        std::string why;
        if (!is_transfer_system(*p, target.transfer, &why)) throw invalid_spec("target is not a transfer system: " + why);
    }
    if (!target_leq(m, fib_image(m, w), target)) throw target_not_above("target is not above the image");
    switch (m) {
        case FibMap::color: return join(w, color_left(p, target.family));
        case FibMap::unit: return join(w, unit_left(p, target.family));
        case FibMap::fold: return join(w, fold_left(p, target.family));
        case FibMap::transfer: return join(w, transfer_left(p, target.transfer));
        case FibMap::transfer_fold:
            if (!admissible(p, target.transfer, target.family)) throw not_admissible("target pair is not admissible");
            return join(w, combined_left(p, target.transfer, target.family));
    }
    return w;
}

Wis localize_ae_unital(const Wis& w) {
    const auto& p = w.pres_ptr();
    const auto f = families(w);
    return join(w, join(triv(p, f.color), zero(p, f.essence)));
}

Wis localize_one_color(const Wis& w) { return join(w, triv(w.pres_ptr())); }

Wis localize_almost_unital(const Wis& w) {
    const auto& p = w.pres_ptr();
    return join(w, join(triv(p), zero(p, families(w).essence)));
}

Wis localize_unital(const Wis& w) { return join(w, zero(w.pres_ptr())); }

Wis localize_indexing(const Wis& w) { return join(w, infty(w.pres_ptr())); }

}  // namespace windex
