
#include "cff/report.hpp"

#include <set>

#include "cff/autgroup.hpp"
#include "cff/parse.hpp"

namespace cff {

namespace {

struct Ctx {
    const RunConfig& cfg;
    FieldCtx k;
    Modulus M;
    Elt gamma = 1;
    KummerCurve curve;
    Json claims = Json::object();
};

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json construct_section(Ctx& c) {
    const CycModel model = torsion_minpoly(c.M);
    const KummerCertificate cert = verify_kummer_model(model, c.gamma);
    Json j;
    j["cyclotomic_minpoly"] = model.minpoly_str();
    j["kummer_model"] = c.curve.str();
    j["certificate"] = {{"ok", cert.ok}, {"residual", cert.residual.str('x', 'y')}};
    c.claims["cyclotomic_model_is_kummer"] = cert.ok;
    return j;
}

Json genus_section(Ctx& c) {
    const std::uint32_t q = c.curve.q();
    const int g = genus_formula(q);
    const RHData a = rh_check(q), b = rh_check(c.curve);
    auto rh = [](const RHData& r) { return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"genus", r.genus}, {"ok", r.ok}}; };
    Json j;
    j["genus_formula"] = g;
    j["rh"] = rh(a);
    j["rh_from_places"] = rh(b);
    c.claims["genus_formula_matches_riemann_hurwitz"] = a.ok && b.ok && a.genus == g && b.genus == g;
    return j;
}

Json count_section(Ctx& c) {
    const std::uint32_t q = c.curve.q();
    const int g = genus_formula(q);
    Json N = Json::array();
    bool weil = true;
    std::uint64_t n1 = 0;
    for (std::uint32_t k = 1; k <= c.cfg.k; ++k) {
        const std::uint64_t n = count_degree_one(c.curve, k, c.cfg.threads);
        if (k == 1) n1 = n;
        weil = weil && weil_bound_ok(q, static_cast<int>(k), g, n);
        N.push_back(n);
    }
    Json j;
    j["k"] = c.cfg.k;
    j["N"] = N;
    c.claims["rational_places_equal_q_plus_1"] = n1 == q + 1;
    c.claims["counts_within_weil_bound"] = weil;
    return j;
}

Json zeta_section(Ctx& c) {
    const std::uint32_t q = c.curve.q();
    const ZetaData z = zeta(c.curve, c.cfg.threads);
    const int gf = genus_formula(q);
    Json L = Json::array();
    for (const auto& a : z.L) L.push_back(big(a));
    bool fe = z.L.front() == 1 && z.L.size() == static_cast<std::size_t>(2 * z.genus + 1);
    for (int i = 0; fe && i <= z.genus; ++i) {
        BigInt qp = 1;
        for (int t = 0; t < z.genus - i; ++t) qp *= q;
        fe = z.L[static_cast<std::size_t>(2 * z.genus - i)] == qp * z.L[static_cast<std::size_t>(i)];
    }
    bool repro = true, weil = true;
    for (std::size_t k = 0; k < z.counts.size(); ++k) {
        repro = repro && count_from_lpoly(q, z.L, static_cast<int>(k + 1)) == z.counts[k];
        weil = weil && weil_bound_ok(q, static_cast<int>(k + 1), z.genus, z.counts[k]);
    }
    Json j;
    j["q"] = q;
    j["modulus"] = c.M.str();
    j["N"] = z.counts;
    j["L"] = L;
    j["genus_zeta"] = genus_from_zeta(z);
    j["genus_formula"] = gf;
    j["rh_ok"] = rh_check(q).ok;
    c.claims["genus_from_zeta_matches_formula"] = genus_from_zeta(z) == gf;
    c.claims["lpolynomial_functional_equation"] = fe;
    c.claims["lpolynomial_reproduces_counts"] = repro;
    c.claims["zeta_counts_within_weil_bound"] = weil;
    c.claims["zeta_rational_places_equal_q_plus_1"] = !z.counts.empty() && z.counts.front() == q + 1;
    return j;
}

Json orbit_sizes(const GroupTable& T) {
    Json a = Json::array();
    for (const auto& o : orbits(T)) a.push_back(o.size());
    return a;
}

Json stabilizer_orders(const GroupTable& T) {
    Json s = Json::object();
    for (const Place& P : T.elements().front().space()->ram) s[P.label] = stabilizer(T, P).size();
    return s;
}

Json aut_section(Ctx& c) {
    const std::uint32_t q = c.curve.q();
    const std::uint64_t n = std::uint64_t{q} * q - 1;
    const FieldCtx& k = c.k;
    const RhoData rd = make_rho_data(c.curve, torsion_minpoly(c.M));
    const Aut& rho = rd.rho;
    const bool odd = k.p() != 2;
    const Aut second = odd ? make_mu(c.curve) : make_omega(c.curve);
    const GroupTable G = GroupTable::closure({rho});
    const GroupTable N = GroupTable::closure({rho, second});
    const auto& ram = rho.space()->ram;

    Json j;
    j["rho"] = {{"unit", format(rd.unit, 'x')},
                {"map", rho.str()},
                {"alpha", rd.alpha ? Json(k.format(*rd.alpha)) : Json(nullptr)},
                {"coefficient", k.format(rd.coeff)}};
    j["second_generator"] = {{"name", odd ? "mu" : "omega"}, {"map", second.str()}};

    bool all_aut = true;
    for (const Aut& g : N.elements()) all_aut = all_aut && is_automorphism(g);
    bool normal = true;
    for (const Aut& g : N.elements()) normal = normal && G.contains(compose(compose(g, rho), invert(g)));
    std::multiset<std::size_t> rsizes;
    for (const auto& o : orbits(G)) rsizes.insert(o.size());
    const GroupTable sb = stabilizer(N, place_at(ram, "Q_beta"));
    const GroupTable sg = stabilizer(N, place_at(ram, "Q_gamma"));
    auto inside_G = [&](const GroupTable& S) {
        if (S.size() != G.size()) return false;
        for (const Aut& g : S.elements())
            if (!G.contains(g)) return false;
        return true;
    };
    bool swap = false, preserve = true;
    for (const Aut& g : N.elements()) {
        const std::string l = act_on_place(g, place_at(ram, "Q_beta")).label;
        swap = swap || l == "Q_gamma";
        preserve = preserve && (l == "Q_beta" || l == "Q_gamma");
    }

    c.claims["rho_order_q2_minus_1"] = order(rho) == n && G.size() == n;
    c.claims["rho_fixes_Q_beta_and_Q_gamma"] = act_on_place(rho, place_at(ram, "Q_beta")).label == "Q_beta" &&
                                               act_on_place(rho, place_at(ram, "Q_gamma")).label == "Q_gamma";
    c.claims["rho_orbits_q_plus_1_1_1"] = rsizes == std::multiset<std::size_t>{1, 1, q + 1};
    c.claims["normalizer_order_2_q2_minus_1"] = N.size() == 2 * n;
    c.claims["group_elements_are_automorphisms"] = all_aut;
    c.claims["normalizer_normalizes_rho"] = normal;
    c.claims["stabilizer_P_inf_order_2_q_minus_1"] = stabilizer(N, place_infinity(ram)).size() == 2 * (q - 1);
    c.claims["stabilizers_of_Q_equal_rho_group"] = inside_G(sb) && inside_G(sg);
    c.claims["some_element_swaps_Q_beta_Q_gamma"] = swap && preserve;
    if (odd) {
        const Aut mu2 = compose(second, second);
        const GroupTable H = GroupTable::closure({power(rho, static_cast<std::int64_t>(q + 1))});
        c.claims["mu_squared_generates_kummer_group"] = H.contains(mu2) && order(mu2) == q - 1;
    } else {
        c.claims["omega_is_involution"] = order(second) == 2;
    }
    const int g = genus_formula(q);
    c.claims["cyclic_group_within_abelian_bound"] = n <= static_cast<std::uint64_t>(4 * g + 4);

    const GroupTable* top = &N;
    GroupTable full;
    Json gens = Json::array({rho.str(), second.str()});
    j["q3_pgl23"] = nullptr;
    j["quotient"] = nullptr;
    if (q == 3) {
        const Aut eps = make_epsilon(c.curve);
        full = GroupTable::closure({rho, second, eps});
        top = &full;
        gens.push_back(eps.str());
        const Pgl23Report pr = pgl23_report(full, rho);
        const Aut iota = power(rho, 4);
        c.claims["epsilon_order_3"] = order(eps) == 3 && is_automorphism(eps);
        c.claims["full_group_order_48"] = full.size() == 48;
        bool all_full = true;
        for (const Aut& e : full.elements()) all_full = all_full && is_automorphism(e);
        c.claims["full_group_elements_are_automorphisms"] = all_full;
        c.claims["iota_central_involution"] = pr.central;
        c.claims["quotient_is_pgl23"] = pr.ok();
        c.claims["iota_quotient_genus_0"] = involution_quotient_genus(iota) == 0;
        j["q3_pgl23"] = pr.ok();
        j["quotient"] = pr.ok() ? Json("PGL(2,3)") : Json(nullptr);
        Json hist = Json::object();
        for (const auto& [o, m] : pr.order_histogram) hist[std::to_string(o)] = m;
        j["quotient_order_histogram"] = hist;
        j["quotient_sylow3_count"] = pr.sylow3_count;
        j["normalizer"] = {{"order", N.size()}, {"stabilizer_orders", stabilizer_orders(N)}};
    }
    j["generators"] = gens;
    j["order"] = top->size();
    j["aut_order"] = top->size();
    j["orbit_sizes"] = orbit_sizes(*top);
    j["rho_orbit_sizes"] = orbit_sizes(G);
    j["stabilizer_orders"] = stabilizer_orders(*top);
    j["p2_full_group"] = odd ? Json(nullptr) : Json("open: only the subgroup generated by rho and omega is computed");
    return j;
}

Json lspace_row(const KummerCurve& curve, const std::string& name, const std::vector<std::string>& labels,
                const std::vector<FFElem>& el, const Divisor& D, bool expect_member) {
    const LSpaceReport r = lspace_check(curve, el, D);
    Json row;
    row["space"] = name;
    row["divisor"] = D.str();
    Json names = Json::array(), mem = Json::array(), vals = Json::array();
    for (std::size_t i = 0; i < el.size(); ++i) {
        names.push_back(labels[i]);
        mem.push_back(static_cast<bool>(r.member[i]));
        vals.push_back(r.valuations[i]);
    }
    row["elements"] = names;
    row["member"] = mem;
    row["independent"] = r.independent;
    row["valuations"] = vals;
    bool pass = expect_member ? r.ok() : std::none_of(r.member.begin(), r.member.end(), [](bool b) { return b; });
    row["pass"] = pass;
    return row;
}

Json lspaces_section(Ctx& c) {
    const KummerCurve& cv = c.curve;
    const auto ram = ramified_places(cv);
    const Place& inf = place_infinity(ram);
    const Place& qb = place_at(ram, "Q_beta");
    const Place& qg = place_at(ram, "Q_gamma");
    const std::int64_t Q = cv.q();
    const FFElem one = cv.one(), v = cv.v(), iy = cv.y().inv(), viy = v * iy;
    Divisor d1, d2, d3, d4;
    d1.add(inf, Q - 1);
    d2.add(inf, Q - 2);
    d2.add(qb, 1);
    d2.add(qg, 1);
    d3.add(inf, 2 * Q - 3);
    d3.add(qb, 1);
    d3.add(qg, 1);
    d4.add(inf, 2 * Q - 3);
    Json rows = Json::array();
    rows.push_back(lspace_row(cv, "L((q-1)P_inf)", {"1", "v"}, {one, v}, d1, true));
    rows.push_back(lspace_row(cv, "L((q-2)P_inf+Q_beta+Q_gamma)", {"1/y"}, {iy}, d2, true));
    Json r3 = lspace_row(cv, "L((2q-3)P_inf+Q_beta+Q_gamma)", {"1", "v", "1/y", "v/y"}, {one, v, iy, viy}, d3, true);
    const bool attained = r3["valuations"][3]["P_inf"].get<std::int64_t>() == -(2 * Q - 3);
    r3["pole_order_at_P_inf_attained"] = attained;
    rows.push_back(r3);
    rows.push_back(lspace_row(cv, "L((2q-3)P_inf) excludes 1/y", {"1/y"}, {iy}, d4, false));
    c.claims["lspace_1_v"] = rows[0]["pass"];
    c.claims["lspace_inverse_y"] = rows[1]["pass"];
    c.claims["lspace_v_over_y_bound_attained"] = rows[2]["pass"].get<bool>() && attained;
    c.claims["inverse_y_not_in_lspace_without_Q"] = rows[3]["pass"];
    return rows;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    const auto [p, e] = prime_power(cfg.q);
    (void)p;
    (void)e;
    if (cfg.q > kMaxQ) fail(ErrorCode::TooLarge, "q = " + std::to_string(cfg.q) + " exceeds the pipeline cap " + std::to_string(kMaxQ));
    Ctx c{cfg, field_of_order(cfg.q), {}, 1, {}, Json::object()};
    c.M = Modulus::parse(c.k, cfg.modulus);
    c.gamma = parse_element(c.k, cfg.gamma).raw();
    if (c.gamma == 0) fail(ErrorCode::DivisionByZero, "gamma must be nonzero");
    c.curve = make_curve(c.M, c.gamma);

    std::vector<std::string> sections;
    if (cfg.command == "verify") {
        if (cfg.which == "all") {
            sections = {"construct", "genus", "count", "lspaces", "aut"};
            if (cfg.q <= 5) sections.insert(sections.begin() + 3, "zeta");
        } else {
            sections = {cfg.which};
        }
    } else {
        sections = {cfg.command};
    }

    Json rep;
    rep["command"] = cfg.command;
    if (cfg.command == "verify") rep["which"] = cfg.which;
    rep["q"] = cfg.q;
    rep["modulus"] = c.M.str();
    rep["gamma"] = c.k.format(c.gamma);
    for (const std::string& s : sections) {
        if (s == "construct") rep["construct"] = construct_section(c);
        else if (s == "genus") rep["genus"] = genus_section(c);
        else if (s == "count") rep["count"] = count_section(c);
        else if (s == "zeta") {
            if (cfg.q > 5) fail(ErrorCode::TooLarge, "zeta needs counts up to the genus; only q <= 5 is within the counting cap");
            rep["zeta"] = zeta_section(c);
        } else if (s == "aut") rep["aut"] = aut_section(c);
        else if (s == "lspaces") rep["lspaces"] = lspaces_section(c);
        else fail(ErrorCode::ParseError, "unknown section '" + s + "'");
    }
    if (cfg.command == "verify" && cfg.which == "all" && cfg.q > 5)
        rep["zeta"] = {{"skipped", "q > 5: counts up to the genus exceed the counting cap"}};
    bool ok = true;
    for (const auto& [key, val] : c.claims.items()) ok = ok && val.get<bool>();
    rep["paper_claims"] = c.claims;
    rep["ok"] = ok;
    return {rep, ok};
}

Json error_report(const RunConfig& cfg, const Error& e) {
    Json rep;
    rep["command"] = cfg.command;
    rep["q"] = cfg.q;
    rep["modulus"] = cfg.modulus;
    rep["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    rep["ok"] = false;
    return rep;
}

}  // namespace cff
