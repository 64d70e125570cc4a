#include "mpbn/refinement.hpp"

#include "mpbn/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mpbn {

// ── MVConfiguration ─────────────────────────────────────────────────────────

MVConfiguration::MVConfiguration(const Configuration& x, int m) : values_(x.size()) {
    for (std::size_t i = 0; i < x.size(); ++i) values_[i] = x[i] ? m : 0;
}

MVConfiguration MVConfiguration::from_string(std::string_view csv) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        const std::string field(csv.substr(pos, comma - pos));
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (field.empty() || used != field.size()) {
            throw Error("invalid multivalued configuration \"" + std::string(csv) + "\"");
        }
        values.push_back(v);
        pos = comma + 1;
    }
    return MVConfiguration(std::move(values));
}

std::string MVConfiguration::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
    }
    return s;
}

// ── MultivaluedNetwork ──────────────────────────────────────────────────────

MultivaluedNetwork::MultivaluedNetwork(std::size_t n, int m, BaseRule base, std::optional<BooleanNetwork> net)
    : n_(n), m_(m), base_(base), net_(std::move(net)) {
    if (m < 1) throw Error("multivalued network needs m >= 1");
}

MultivaluedNetwork MultivaluedNetwork::zero(std::size_t n, int m) {
    return MultivaluedNetwork(n, m, BaseRule::Zero, std::nullopt);
}

MultivaluedNetwork MultivaluedNetwork::block_sign(const BooleanNetwork& net, int m) {
    if (m < 1 || m % 2 == 0) throw Error("block-sign base rule needs an odd m, got " + std::to_string(m));
    return MultivaluedNetwork(net.size(), m, BaseRule::BlockSign, net);
}

void MultivaluedNetwork::check_configuration(const MVConfiguration& x) const {
    if (x.size() != n_) {
        throw Error("multivalued configuration " + x.to_string() + " has dimension " + std::to_string(x.size()) +
                    ", expected " + std::to_string(n_));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] < 0 || x[i] > m_) {
            throw Error("multivalued configuration " + x.to_string() + " leaves [0, " + std::to_string(m_) + "]");
        }
    }
}

Delta MultivaluedNetwork::base_delta(const MVConfiguration& x) const {
    Delta d(n_, 0);
    if (base_ == BaseRule::Zero) return d;
    const int block = (m_ + 1) / 2;
    Configuration z(n_);
    for (std::size_t i = 0; i < n_; ++i) z.set(i, x[i] / block != 0);
    for (std::size_t j = 0; j < n_; ++j) d[j] = evaluate(*net_, j, z) ? 1 : -1;
    return d;
}

Delta MultivaluedNetwork::delta(const MVConfiguration& x) const {
    if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
    return base_delta(x);
}

int MultivaluedNetwork::delta(const MVConfiguration& x, std::size_t i) const { return delta(x)[i]; }

namespace {

void check_delta(const Delta& d, std::size_t n) {
    if (d.size() != n) throw Error("delta vector has dimension " + std::to_string(d.size()));
    for (int v : d) {
        if (v < -1 || v > 1) throw Error("delta entries must lie in {-1, 0, 1}");
    }
}

}  // namespace

void MultivaluedNetwork::set_override(const MVConfiguration& x, const Delta& d) {
    check_configuration(x);
    check_delta(d, n_);
    if (auto it = overrides_.find(x); it != overrides_.end() && it->second != d) {
        throw Error("override collision at " + x.to_string());
    }
    overrides_[x] = d;
    pinned_[x] = std::vector<bool>(n_, true);
}

void MultivaluedNetwork::set_component(const MVConfiguration& x, std::size_t i, int d) {
    check_configuration(x);
    if (i >= n_ || d < -1 || d > 1) throw Error("invalid component override");
    Delta current = delta(x);
    auto& pins = pinned_[x];
    if (pins.empty()) pins.assign(n_, false);
    if (pins[i] && current[i] != d) {
        throw Error("override collision at " + x.to_string() + " on component " + std::to_string(i + 1));
    }
    current[i] = d;
    pins[i] = true;
    overrides_[x] = std::move(current);
}

// ── Dynamics ────────────────────────────────────────────────────────────────

std::vector<MVConfiguration> mv_successors(const MultivaluedNetwork& F, const MVConfiguration& x) {
    F.check_configuration(x);
    const Delta d = F.delta(x);
    std::vector<std::size_t> applicable;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int v = x[i] + d[i];
        if (d[i] != 0 && v >= 0 && v <= F.max_value()) applicable.push_back(i);
    }
    if (applicable.size() > 20) {
        throw CapExceeded("multivalued successors: " + std::to_string(applicable.size()) +
                          " applicable components exceed the limit of 20");
    }
    std::vector<MVConfiguration> out;
    const std::uint64_t subsets = std::uint64_t{1} << applicable.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        MVConfiguration y = x;
        for (std::size_t k = 0; k < applicable.size(); ++k) {
            if (mask >> k & 1U) y.set(applicable[k], x[applicable[k]] + d[applicable[k]]);
        }
        out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool mv_reachable(const MultivaluedNetwork& F, const MVConfiguration& from, const MVConfiguration& to,
                  std::size_t state_cap) {
    F.check_configuration(to);
    std::set<MVConfiguration> seen{from};
    std::deque<MVConfiguration> frontier{from};
    while (!frontier.empty()) {
        const MVConfiguration cur = std::move(frontier.front());
        frontier.pop_front();
        if (cur == to) return true;
        for (auto& y : mv_successors(F, cur)) {
            if (!seen.insert(y).second) continue;
            if (seen.size() > state_cap) throw CapExceeded("multivalued reachability exceeds the state cap");
            frontier.push_back(std::move(y));
        }
    }
    return false;
}

Hypercube beta(const MVConfiguration& x, int m) {
    Hypercube h(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            h.set(i, Cell::Zero);
        } else if (x[i] == m) {
            h.set(i, Cell::One);
        }
    }
    return h;
}

namespace {

std::optional<RefinementViolation> violation_at(const MultivaluedNetwork& F, const BooleanNetwork& net,
                                                const MVConfiguration& x) {
    const Delta d = F.delta(x);
    Hypercube h;
    bool have_beta = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!have_beta) {
            h = beta(x, F.max_value());
            have_beta = true;
        }
        if (!exists_value(net, i, h, d[i] > 0)) return RefinementViolation{x, i, d[i]};
    }
    return std::nullopt;
}

}  // namespace

std::optional<RefinementViolation> find_refinement_violation(const MultivaluedNetwork& F, const BooleanNetwork& net,
                                                             std::size_t state_cap) {
    if (F.size() != net.size()) throw Error("multivalued network and Boolean network differ in dimension");
    if (F.base() == BaseRule::Zero) {
        for (const auto& [x, d] : F.overrides()) {
            if (auto v = violation_at(F, net, x)) return v;
        }
        return std::nullopt;
    }
    const auto radix = static_cast<std::uint64_t>(F.max_value()) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < F.size(); ++i) {
        total *= radix;
        if (total > state_cap) {
            throw CapExceeded("(m+1)^n exceeds the refinement check cap of " + std::to_string(state_cap));
        }
    }
    MVConfiguration x(std::vector<int>(F.size(), 0));
    for (std::uint64_t s = 0; s < total; ++s) {
        if (auto v = violation_at(F, net, x)) return v;
        for (std::size_t i = F.size(); i-- > 0;) {
            if (x[i] < F.max_value()) {
                x.set(i, x[i] + 1);
                break;
            }
            x.set(i, 0);
        }
    }
    return std::nullopt;
}

bool check_refinement(const MultivaluedNetwork& F, const BooleanNetwork& net, std::size_t state_cap) {
    return !find_refinement_violation(F, net, state_cap);
}

// ── α ───────────────────────────────────────────────────────────────────────

std::uint64_t AlphaSet::count() const {
    const std::size_t d = dynamic_count();
    if (d >= 64) throw CapExceeded("too many dynamic components to count");
    return std::uint64_t{1} << d;
}

bool AlphaSet::contains(const MPConfiguration& x) const {
    if (x.size() != pattern_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        switch (pattern_[i]) {
        case Cell::Zero:
            if (x[i] != MPState::Zero) return false;
            break;
        case Cell::One:
            if (x[i] != MPState::One) return false;
            break;
        case Cell::Free:
            if (!is_dynamic(x[i])) return false;
            break;
        }
    }
    return true;
}

std::vector<MPConfiguration> AlphaSet::members() const {
    std::vector<std::size_t> dynamic;
    std::vector<MPState> base(pattern_.size());
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_.is_free(i)) {
            dynamic.push_back(i);
        } else {
            base[i] = pattern_[i] == Cell::One ? MPState::One : MPState::Zero;
        }
    }
    if (dynamic.size() > 20) throw CapExceeded("more than 2^20 most-permissive interpretations");
    std::vector<MPConfiguration> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dynamic.size()); ++mask) {
        for (std::size_t k = 0; k < dynamic.size(); ++k) {
            base[dynamic[k]] = (mask >> k & 1U) ? MPState::Decreasing : MPState::Increasing;
        }
        out.emplace_back(base);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlphaSet alpha_interpretations(const MVConfiguration& x, int m) { return AlphaSet(x, m); }

// ── Witnesses ───────────────────────────────────────────────────────────────

MultivaluedNetwork build_reach_witness(const BooleanNetwork& net, const Configuration& x, const Configuration& y) {
    const ReachTrace trace = mp_reach_trace(net, x, y);
    if (!trace.reachable) {
        throw PreconditionError(y.to_string() + " is not reachable from " + x.to_string());
    }
    const std::size_t n = net.size();
    auto F = MultivaluedNetwork::zero(n, 2);
    if (x == y) return F;
    // Stage states: Boolean cells at 2·x, opened cells at the middle value 1.
    MVConfiguration z(x, 2);
    for (auto e : trace.rounds.back().opening_order) {
        Delta d(n, 0);
        d[e] = x[e] ? -1 : 1;
        F.set_override(z, d);
        z.set(e, 1);
    }
    Delta last(n, 0);
    for (std::size_t i = 0; i < n; ++i) last[i] = (y[i] ? 2 : 0) - z[i];
    F.set_override(z, last);
    return F;
}

namespace {

void require_valid_trace(const BooleanNetwork& net, const std::vector<MPConfiguration>& trace) {
    if (trace.empty()) throw PreconditionError("empty most-permissive trace");
    for (const auto& x : trace) {
        if (x.size() != net.size()) throw PreconditionError("trace configuration has the wrong dimension");
    }
    if (!trace.front().is_binary()) {
        throw PreconditionError("trace must start from a binary configuration, got " + trace.front().to_string());
    }
    for (std::size_t i = 1; i < trace.size(); ++i) {
        const auto succ = mp_successors(net, trace[i - 1]);
        if (std::find(succ.begin(), succ.end(), trace[i]) == succ.end()) {
            throw PreconditionError("step " + std::to_string(i) + " (" + trace[i - 1].to_string() + " -> " +
                                    trace[i].to_string() + ") is not a most-permissive transition");
        }
    }
}

std::optional<std::size_t> changed_component(const MPConfiguration& a, const MPConfiguration& b) {
    std::optional<std::size_t> e;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == b[j]) continue;
        if (e) return std::nullopt;
        e = j;
    }
    return e;
}

}  // namespace

TraceWitness build_trace_witness(const BooleanNetwork& net, const std::vector<MPConfiguration>& mp_trace) {
    require_valid_trace(net, mp_trace);
    constexpr int m = 3;
    auto F = MultivaluedNetwork::block_sign(net, m);
    TraceRefinementCertificate cert;
    cert.mp_trace = mp_trace;
    cert.mv_trace.emplace_back(*mp_trace.front().binary(), m);
    cert.kappa.push_back(0);

    for (std::size_t i = 1; i < mp_trace.size(); ++i) {
        const std::size_t e = *changed_component(mp_trace[i - 1], mp_trace[i]);
        const MPState s = mp_trace[i][e];
        if (!is_dynamic(s)) {
            cert.kappa.push_back(cert.kappa.back());
            continue;
        }
        // Opening towards ↗ walks e up to 2, towards ↘ down to 1.
        const int dir = s == MPState::Increasing ? 1 : -1;
        const int goal = s == MPState::Increasing ? 2 : 1;
        if ((cert.mv_trace.back()[e] - goal) * dir > 0) {
            throw Error("internal: component " + std::to_string(e + 1) + " overshot its band at step " +
                        std::to_string(i));
        }
        while (cert.mv_trace.back()[e] != goal) {
            const MVConfiguration& cur = cert.mv_trace.back();
            if (F.delta(cur, e) != dir) F.set_component(cur, e, dir);
            MVConfiguration next = cur;
            next.set(e, cur[e] + dir);
            cert.mv_trace.push_back(std::move(next));
        }
        cert.kappa.push_back(cert.mv_trace.size() - 1);
    }
    return {std::move(F), std::move(cert)};
}

TraceVerdict verify_trace_refinement(const BooleanNetwork& net, const MultivaluedNetwork& F,
                                     const TraceRefinementCertificate& cert) {
    auto fail = [](int condition, std::string why) { return TraceVerdict{false, condition, std::move(why)}; };
    const auto& xs = cert.mp_trace;
    const auto& ys = cert.mv_trace;
    const auto& kappa = cert.kappa;
    const int m = F.max_value();
    const std::size_t n = net.size();

    if (F.size() != n) return fail(0, "multivalued network dimension differs from the Boolean network");
    if (xs.empty() || ys.empty()) return fail(0, "empty trace");
    if (kappa.size() != xs.size()) {
        return fail(0, "kappa has " + std::to_string(kappa.size()) + " entries for " + std::to_string(xs.size()) +
                           " most-permissive configurations");
    }
    for (const auto& x : xs) {
        if (x.size() != n) return fail(0, "most-permissive configuration " + x.to_string() + " has wrong dimension");
    }
    for (const auto& y : ys) {
        try {
            F.check_configuration(y);
        } catch (const Error& err) {
            return fail(0, err.what());
        }
    }

    for (std::size_t i = 1; i < kappa.size(); ++i) {
        if (kappa[i] < kappa[i - 1]) {
            return fail(1, "kappa decreases at " + std::to_string(i) + ": " + std::to_string(kappa[i - 1]) +
                               " > " + std::to_string(kappa[i]));
        }
    }
    if (kappa.front() != 0) return fail(2, "kappa(0) = " + std::to_string(kappa.front()) + ", expected 0");
    if (kappa.back() != ys.size() - 1) {
        return fail(2, "kappa(k) = " + std::to_string(kappa.back()) + ", expected l = " +
                           std::to_string(ys.size() - 1));
    }

    const auto x0 = xs.front().binary();
    if (!x0) return fail(3, "initial most-permissive configuration is not binary");
    if (MVConfiguration(*x0, m) != ys.front()) {
        return fail(3, "initial multivalued configuration " + ys.front().to_string() + " differs from m·x = " +
                           MVConfiguration(*x0, m).to_string());
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const MVConfiguration& y = ys[kappa[i]];
        for (std::size_t j = 0; j < n; ++j) {
            if ((xs[i][j] == MPState::Zero && y[j] >= m) || (xs[i][j] == MPState::One && y[j] <= 0)) {
                return fail(3, "component " + std::to_string(j + 1) + " of " + xs[i].to_string() +
                                   " is not matched by " + y.to_string());
            }
        }
    }

    for (std::size_t i = 1; i < xs.size(); ++i) {
        const auto e = changed_component(xs[i - 1], xs[i]);
        if (!e || !is_dynamic(xs[i][*e])) continue;
        const int want = xs[i][*e] == MPState::Increasing ? 1 : -1;
        const MVConfiguration& y = ys[kappa[i - 1]];
        const int got = F.delta(y, *e);
        if (got != want) {
            return fail(4, "opening of component " + std::to_string(*e + 1) + " at step " + std::to_string(i) +
                               " needs F = " + std::to_string(want) + " at " + y.to_string() + ", found " +
                               std::to_string(got));
        }
    }

    for (std::size_t i = 1; i < xs.size(); ++i) {
        const auto succ = mp_successors(net, xs[i - 1]);
        if (std::find(succ.begin(), succ.end(), xs[i]) == succ.end()) {
            return fail(6, xs[i - 1].to_string() + " -> " + xs[i].to_string() + " is not a most-permissive transition");
        }
    }
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const auto succ = mv_successors(F, ys[i - 1]);
        if (!std::binary_search(succ.begin(), succ.end(), ys[i])) {
            return fail(5, ys[i - 1].to_string() + " -> " + ys[i].to_string() + " is not a multivalued transition");
        }
    }
    return {};
}

// ── JSON ────────────────────────────────────────────────────────────────────

nlohmann::json to_json(const MultivaluedNetwork& F) {
    nlohmann::json overrides = nlohmann::json::object();
    for (const auto& [x, d] : F.overrides()) overrides[x.to_string()] = d;
    return {{"m", F.max_value()},
            {"base", F.base() == BaseRule::Zero ? "zero" : "block-sign"},
            {"overrides", std::move(overrides)}};
}

MultivaluedNetwork multivalued_from_json(const nlohmann::json& j, const BooleanNetwork& net) {
    try {
        const int m = j.at("m").get<int>();
        const std::string base = j.value("base", std::string("zero"));
        std::optional<MultivaluedNetwork> F;
        if (base == "zero") {
            F = MultivaluedNetwork::zero(net.size(), m);
        } else if (base == "block-sign") {
            F = MultivaluedNetwork::block_sign(net, m);
        } else {
            throw Error("unknown base rule \"" + base + "\"");
        }
        if (j.contains("overrides")) {
            for (const auto& [key, value] : j.at("overrides").items()) {
                F->set_override(MVConfiguration::from_string(key), value.get<Delta>());
            }
        }
        return std::move(*F);
    } catch (const nlohmann::json::exception& err) {
        throw Error(std::string("malformed multivalued network: ") + err.what());
    }
}

nlohmann::json to_json(const TraceRefinementCertificate& cert) {
    nlohmann::json mp = nlohmann::json::array();
    for (const auto& x : cert.mp_trace) mp.push_back(x.to_string());
    nlohmann::json mv = nlohmann::json::array();
    for (const auto& y : cert.mv_trace) mv.push_back(y.values());
    return {{"mp_trace", std::move(mp)}, {"mv_trace", std::move(mv)}, {"kappa", cert.kappa}};
}

TraceRefinementCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        TraceRefinementCertificate cert;
        for (const auto& s : j.at("mp_trace")) cert.mp_trace.push_back(MPConfiguration::from_string(s.get<std::string>()));
        for (const auto& v : j.at("mv_trace")) cert.mv_trace.emplace_back(v.get<std::vector<int>>());
        cert.kappa = j.at("kappa").get<std::vector<std::size_t>>();
        return cert;
    } catch (const nlohmann::json::exception& err) {
        throw Error(std::string("malformed certificate: ") + err.what());
    }
}

}  // namespace mpbn
