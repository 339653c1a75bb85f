#include "hopfeq/catalog.hpp"
#include "hopfeq/pairing.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace hopfeq;

namespace {

const Field Q = Field::rationals();
const Field G2 = Field::gf(2);

Scalar qs(long long v) { return Scalar::from_int(Q, v); }

}  // namespace

TEST_CASE("sigma_a on the quantum plane") {
    Scalar a = qs(2), q = qs(2);
    ExampleBundle b = example_quantum_plane(Q, q, a, 4);
    const Pairing& s = b.sigmas[0].second;
    GenId x = b.host->alphabet.id("x"), y = b.host->alphabet.id("y");

    CHECK(s.eval_word(0, {}) == qs(1));
    CHECK(s.eval_word(0, {x}) == qs(0));
    CHECK(s.eval_word(0, {y}) == a);
    // one (H3) expansion: sigma(x (x) x y) = sigma(x (x) x) sigma(x (x) y) = 0
    CHECK(s.eval_word(0, {x, y}) == qs(0));
    // likewise sigma(x (x) y y) = sigma(x (x) y)^2 = a^2
    CHECK(s.eval_word(0, {y, y}) == a * a);

    CHECK(check_well_defined(s).ok());
    CHECK(check_hopf_function(s, H1Mode::generators).ok());
    CHECK(check_hopf_function(s, H1Mode::words, 3).ok());

    // a flipped value breaks well-definedness over x y - q y x
    auto vals = s.values;
    vals[0][static_cast<std::size_t>(x)] = qs(1);
    Pairing bad = pairing_from_table(s.host, s.C, vals, s.unit_values);
    CHECK(check_well_defined(bad).status == Status::fail);
}

TEST_CASE("sigma from the structure constants of the example matrix") {
    Pairing s = sigma_from_r(fk_matrix(G2), 4);
    const Host& br = *s.host;
    auto val = [&](const char* c, const char* h) {
        return s.values[static_cast<std::size_t>(br.alphabet.id(c))]
                       [static_cast<std::size_t>(br.alphabet.id(h))];
    };
    // the five nonzero generator pairs forced by sigma(c_iv (x) c_ju) = x_uv^{ji}
    CHECK(val("c11", "c11") == Scalar::one(G2));
    CHECK(val("c12", "c21") == Scalar::one(G2));
    CHECK(val("c22", "c11") == Scalar::one(G2));
    CHECK(val("c11", "c22") == Scalar::one(G2));
    CHECK(val("c22", "c22") == Scalar::one(G2));
    // and the corrected diagonal values
    CHECK(val("c21", "c21") == Scalar::zero(G2));
    int nonzero = 0;
    for (const auto& row : s.values)
        for (const auto& v : row)
            if (!v.is_zero()) ++nonzero;
    CHECK(nonzero == 5);

    CHECK(check_hopf_function(s, H1Mode::generators).ok());
    CHECK(check_dec_identity(s, 2).ok());
    CHECK(r_sigma(s, canonical_comodule(br, 2)) == fk_matrix(G2));
}

TEST_CASE("sigma_from_r in dimension one") {
    EndoTensor one(Q, 1), zero(Q, 1);
    one.at(0, 0, 0, 0) = Scalar::one(Q);
    Pairing s1 = sigma_from_r(one, 2);
    CHECK(s1.values[0][0] == Scalar::one(Q));  // sigma(c (x) c) = 1
    Pairing s0 = sigma_from_r(zero, 2);
    CHECK(s0.values[0][0] == Scalar::zero(Q));
    CHECK(check_well_defined(s0).ok());
}

TEST_CASE("well-definedness catches corrupted tables") {
    Pairing s = sigma_from_r(fk_matrix(G2), 4);
    auto vals = s.values;
    vals[0][0] = vals[0][0] + Scalar::one(G2);
    Pairing bad = pairing_from_table(s.host, s.C, vals, s.unit_values);
    Verdict v = check_well_defined(bad);
    CHECK(v.status == Status::fail);
    CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("T(k) sigma is a Hopf function") {
    ExampleBundle tk = example_tk(Q);
    const Pairing& s = tk.sigmas[0].second;
    CHECK(check_hopf_function(s, H1Mode::generators).ok());
    CHECK(check_hopf_function(s, H1Mode::words, 3).ok());
    CHECK(check_dec_identity(s, 2).ok());

    auto vals = s.values;
    vals[0][static_cast<std::size_t>(tk.host->alphabet.id("z"))] = qs(1);
    Pairing bad = pairing_from_table(s.host, s.C, vals, s.unit_values);
    CHECK_FALSE(check_hopf_function(bad, H1Mode::generators).ok());
}

TEST_CASE("convolution on C (x) C (x) H") {
    ExampleBundle fk = example_fk(G2);
    const Pairing& s = fk.sigmas[1].second;  // corrected
    REQUIRE(fk.sigmas[1].first == "corrected");

    // the convolution unit eps (x) eps (x) eps is neutral
    TripleFunctional s12 = lift_sigma(s, SigmaLeg::s12, 2);
    TripleFunctional unit(s.host, s.C, s12.grid());
    for (std::size_t c = 0; c < s.C.size(); ++c)
        for (std::size_t d = 0; d < s.C.size(); ++d)
            for (const Word& w : s12.grid())
                unit.at(static_cast<int>(c), static_cast<int>(d), w) =
                    s.C.eps[c] * s.C.eps[d] *
                    s.host->counit(NCPoly::monomial(G2, w, Scalar::one(G2)));
    CHECK(unit.convolve(s12) == s12);
    CHECK(s12.convolve(unit) == s12);

    // (s12 * s23)(c,d,x) = sum sigma(c (x) d1) sigma(d2 (x) x)
    TripleFunctional lhs = lift_and_convolve({SigmaLeg::s12, SigmaLeg::s23}, s, 2);
    for (std::size_t c = 0; c < s.C.size(); ++c)
        for (std::size_t d = 0; d < s.C.size(); ++d)
            for (const Word& w : lhs.grid()) {
                Scalar want = Scalar::zero(G2);
                for (const auto& [d1, d2, coef] : s.C.delta[d])
                    want += coef *
                            s.eval(static_cast<int>(c),
                                   NCPoly::monomial(G2, s.C.basis[static_cast<std::size_t>(d1)],
                                                    Scalar::one(G2))) *
                            s.eval_word(d2, w);
                CHECK(lhs.at(static_cast<int>(c), static_cast<int>(d), w) == want);
            }

    // the convolution identity on all 4 x 4 x 5 basis triples
    CHECK(check_dec_identity(s, 2).ok());

    // one flipped value breaks it
    auto vals = s.values;
    vals[1][static_cast<std::size_t>(fk.host->alphabet.id("y"))] = Scalar::one(G2);
    Pairing bad = pairing_from_table(s.host, s.C, vals, s.unit_values);
    CHECK(check_dec_identity(bad, 2).status == Status::fail);

    // trivial sigma = eps (x) eps on C = k1 inside T(k)
    ExampleBundle tk = example_tk(Q);
    Subcoalgebra c1 = Subcoalgebra::make(*tk.host, {"1"});
    Pairing triv = integral_to_sigma(tk.host, c1, {qs(1), qs(1), qs(0)});  // T = eps
    CHECK(check_dec_identity(triv, 2).ok());
}

TEST_CASE("R_sigma reconstructions") {
    // B_q^2 at q = 2: R_sigma = f_q (x) (Id - f_q), frozen entries
    Scalar q = qs(2);
    ExampleBundle b = example_q_family(QFamily::bq2, Q, q, 4);
    EndoTensor r = r_sigma(b.sigmas[0].second, *b.comodule);
    CHECK(r == *b.defining_r);
    auto m = r.to_matrix();
    // R(e1 (x) e2) = e1 (x) e2 - q e1 (x) e1; R(e2 (x) e2) = q e1 (x) e2 - q^2 e1 (x) e1
    CHECK(m[0][1] == -q);
    CHECK(m[1][1] == qs(1));
    CHECK(m[0][3] == -(q * q));
    CHECK(m[1][3] == q);
    for (std::size_t row = 0; row < 4; ++row) {
        CHECK(m[row][0].is_zero());
        CHECK(m[row][2].is_zero());
    }
    CHECK(check_equation(EquationKind::hopf, r).ok());

    // trivial sigma on C = k1 with the trivial coaction gives the identity
    ExampleBundle tk = example_tk(Q);
    Subcoalgebra c1 = Subcoalgebra::make(*tk.host, {"1"});
    Pairing triv = integral_to_sigma(tk.host, c1, {qs(1), qs(1), qs(0)});
    Comodule cm;
    cm.n = 2;
    cm.g = {{NCPoly::unit(Q), NCPoly::zero(Q)}, {NCPoly::zero(Q), NCPoly::unit(Q)}};
    CHECK(r_sigma(triv, cm) == EndoTensor::identity(Q, 2));
}

TEST_CASE("modules from sigma") {
    ExampleBundle fk = example_fk(G2);
    const Pairing& s = fk.sigmas[1].second;  // corrected
    ModuleAction act = module_from_sigma(s, *fk.comodule);
    CHECK(validate_module_action(*fk.host, act).ok());
    CHECK(check_hopf_module(*fk.host, act, *fk.comodule, 1).ok());
    CHECK(check_hopf_module(*fk.host, act, *fk.comodule, 2).ok());
    // t . m1 = sigma(x (x) t) m1 + sigma(z (x) t) m2 = m1
    Matrix t_mat = act.letter_matrix[static_cast<std::size_t>(fk.host->alphabet.id("t"))];
    CHECK(t_mat[0][0] == Scalar::one(G2));
    CHECK(t_mat[1][0] == Scalar::zero(G2));
    CHECK(r_from_hopf_module(act, *fk.comodule) == r_sigma(s, *fk.comodule));

    // the verbatim table does not give a Hopf module
    const Pairing& verb = fk.sigmas[0].second;
    ModuleAction bad = module_from_sigma(verb, *fk.comodule);
    bool rep_fails = !validate_module_action(*fk.host, bad).ok();
    bool hm_fails = !check_hopf_module(*fk.host, bad, *fk.comodule, 1).ok();
    CHECK(rep_fails);
    CHECK(hm_fails);

    // quantum plane, one dimensional comodule rho(m) = m (x) x:
    // y . m = a m and x . m = 0
    Scalar a = qs(3);
    ExampleBundle qp = example_quantum_plane(Q, qs(2), a, 4);
    Comodule one_dim;
    one_dim.n = 1;
    one_dim.g = {{qp.host->gen_poly("x")}};
    ModuleAction qact = module_from_sigma(qp.sigmas[0].second, one_dim);
    CHECK(qact.letter_matrix[static_cast<std::size_t>(qp.host->alphabet.id("y"))][0][0] == a);
    CHECK(qact.letter_matrix[static_cast<std::size_t>(qp.host->alphabet.id("x"))][0][0] == qs(0));
}

TEST_CASE("right integrals") {
    ExampleBundle tk = example_tk(Q);
    auto space = right_integral_space(*tk.host);
    REQUIRE(space.size() == 2);  // {T : T(x) = 0}
    std::size_t xi = static_cast<std::size_t>(tk.host->alphabet.id("x")) + 1;
    for (const auto& t : space) {
        CHECK(t[xi].is_zero());
        CHECK(check_right_integral(*tk.host, t).ok());
    }

    ExampleBundle z2 = example_group_algebra(Q, 2);
    auto zspace = right_integral_space(*z2.host);
    REQUIRE(zspace.size() == 1);  // {T : T(g) = 0}
    CHECK(zspace[0][1].is_zero());
    CHECK_FALSE(zspace[0][0].is_zero());

    // the trivial bialgebra k: the whole dual
    TableBialgebraData kd;
    kd.field = Q;
    kd.basis = {"1"};
    kd.unit = "1";
    kd.mult = {{{{"1", qs(1)}}}};
    kd.delta = {{{"1", "1", qs(1)}}};
    kd.eps = {qs(1)};
    Host k = make_table_bialgebra(kd);
    CHECK(right_integral_space(k).size() == 1);
}

TEST_CASE("integral round trips") {
    ExampleBundle tk = example_tk(Q);
    // T(1)=0, T(x)=0, T(z)=1 with C = span{x}: sigma_T(x (x) z) = 1, (H1) holds
    IntegralFunctional t = {qs(0), qs(0), qs(1)};
    CHECK(check_right_integral(*tk.host, t).ok());
    Pairing st = integral_to_sigma(tk.host, *tk.C, t);
    CHECK(st.values[0][static_cast<std::size_t>(tk.host->alphabet.id("z"))] == qs(1));
    CHECK(check_h1(st, H1Mode::generators).ok());
    CHECK(check_h1(st, H1Mode::words, 3).ok());

    // round trip through a unit-containing subcoalgebra: T -> sigma_T -> T
    Subcoalgebra c1x = Subcoalgebra::make(*tk.host, {"1", "x"});
    IntegralFunctional t2 = {qs(5), qs(0), qs(7)};
    CHECK(check_right_integral(*tk.host, t2).ok());
    Pairing st2 = integral_to_sigma(tk.host, c1x, t2);
    CHECK(check_h1(st2, H1Mode::generators).ok());
    CHECK(sigma_to_integral(st2) == t2);

    // zero integral -> zero pairing -> zero integral
    IntegralFunctional z = {qs(0), qs(0), qs(0)};
    Pairing sz = integral_to_sigma(tk.host, c1x, z);
    CHECK(sigma_to_integral(sz) == z);

    // to_integral requires the unit inside C
    CHECK_THROWS_AS(sigma_to_integral(st), std::invalid_argument);

    // any pairing on all of H satisfying (H1): T(h) = sigma(1 (x) h) is a
    // right integral (the integral obstruction, tested on table hosts)
    Subcoalgebra full = Subcoalgebra::make(*tk.host, {"1", "x", "z"});
    Pairing sfull = integral_to_sigma(tk.host, full, t2);
    CHECK(check_h1(sfull, H1Mode::generators).ok());
    CHECK(check_right_integral(*tk.host, sigma_to_integral(sfull)).ok());
}

TEST_CASE("right convolution inverse re-derives (H2)") {
    // for sigma with a right inverse, multiplicativity at 1 forces
    // sigma(c (x) 1) = eps(c); fk's corrected sigma is its own inverse
    ExampleBundle fk = example_fk(G2);
    const Pairing& s = fk.sigmas[1].second;
    CHECK(check_convolution_inverse(s, s, 2).ok());
    for (std::size_t c = 0; c < s.C.size(); ++c) {
        // sigma(c (x) 1) = sum sigma(c1 (x) 1) sigma(c2 (x) 1)
        Scalar lhs = s.unit_values[c], prod = Scalar::zero(G2), pair = Scalar::zero(G2);
        for (const auto& [a, b, coef] : s.C.delta[c]) {
            prod += coef * s.unit_values[static_cast<std::size_t>(a)] *
                    s.unit_values[static_cast<std::size_t>(b)];
            pair += coef * s.unit_values[static_cast<std::size_t>(a)] *
                    s.unit_values[static_cast<std::size_t>(b)];
        }
        CHECK(lhs == prod);
        CHECK(pair == s.C.eps[c]);   // sum sigma(c1 (x) 1) sigma'(c2 (x) 1) = eps(c)
        CHECK(lhs == s.C.eps[c]);    // and hence (H2)
    }
}

TEST_CASE("sigma inverse from the inverse matrix") {
    auto res = sigma_inverse_from_rinv(fk_matrix(G2), 4);
    REQUIRE(res.sigma_prime.has_value());
    CHECK(res.commute13.ok());
    Pairing s = sigma_from_r(fk_matrix(G2), 4);
    CHECK(res.sigma_prime->values == s.values);  // characteristic two: sigma' = sigma
    CHECK(check_convolution_inverse(s, *res.sigma_prime, 2).ok());

    // identity matrix: sigma = sigma' = the Kronecker pairing
    EndoTensor id = EndoTensor::identity(G2, 2);
    auto rid = sigma_inverse_from_rinv(id, 4);
    REQUIRE(rid.sigma_prime.has_value());
    Pairing sid = sigma_from_r(id, 4);
    CHECK(rid.sigma_prime->values == sid.values);
    const Host& br = *sid.host;
    for (int i = 0; i < 2; ++i)
        for (int v = 0; v < 2; ++v)
            for (int j = 0; j < 2; ++j)
                for (int u = 0; u < 2; ++u)
                    CHECK(sid.values[static_cast<std::size_t>(comatrix_gen(2, i, v))]
                                    [static_cast<std::size_t>(comatrix_gen(2, j, u))] ==
                          Scalar::from_int(G2, (i == v && j == u) ? 1 : 0));
    (void)br;
    CHECK(check_convolution_inverse(sid, *rid.sigma_prime, 2).ok());
}

TEST_CASE("braided contrast checks") {
    // the trivial bialgebra k with the trivial pairing is braided
    TableBialgebraData kd;
    kd.field = Q;
    kd.basis = {"1"};
    kd.unit = "1";
    kd.mult = {{{{"1", qs(1)}}}};
    kd.delta = {{{"1", "1", qs(1)}}};
    kd.eps = {qs(1)};
    auto k = std::make_shared<Host>(make_table_bialgebra(kd));
    Subcoalgebra ck = Subcoalgebra::make(*k, {"1"});
    Pairing sk = pairing_from_table(k, ck, {{}}, {qs(1)});
    CHECK(check_braided(sk).ok());
    CHECK(check_qybe_from_braided(sk).ok());

    // the bicharacter sigma(g^a (x) g^b) = (-1)^{ab} on k[Z2] over Q
    ExampleBundle z2 = example_group_algebra(Q, 2);
    Pairing bich = z2_bicharacter(z2.host);
    CHECK(check_braided(bich).ok());
    CHECK(check_qybe_from_braided(bich).ok());

    // fk's sigma extended by zero to all of H (x) H is not braided
    ExampleBundle fk = example_fk(G2);
    Subcoalgebra full = Subcoalgebra::make(*fk.host, {"1", "x", "y", "z", "t"});
    const Pairing& corr = fk.sigmas[1].second;
    std::vector<std::vector<Scalar>> vals(5, std::vector<Scalar>(4, Scalar::zero(G2)));
    std::vector<Scalar> unit_vals(5, Scalar::zero(G2));
    for (std::size_t c = 0; c < 4; ++c) {
        vals[c + 1] = corr.values[c];
        unit_vals[c + 1] = corr.unit_values[c];
    }
    Pairing ext = pairing_from_table(fk.host, full, vals, unit_vals);
    Verdict v = check_braided(ext);
    CHECK(v.status == Status::fail);
    CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("exhaustive sigma search") {
    // no Hopf function on any subcoalgebra of k[Z2], over GF(2) and GF(3)
    for (std::uint64_t p : {2ull, 3ull}) {
        ExampleBundle z2 = example_group_algebra(Field::gf(p), 2);
        for (const auto& F : z2.sigma_search_subcoalgebras) {
            Subcoalgebra C = Subcoalgebra::make(*z2.host, F);
            CHECK(search_hopf_functions(z2.host, C).empty());
        }
    }

    // T(k) with C = k{x} over GF(2): the paper's table and the integral-induced
    // table sigma_T with T = (1,0,0) both pass; nothing else does
    ExampleBundle tk = example_tk(G2);
    auto found = search_hopf_functions(tk.host, *tk.C);
    REQUIRE(found.size() == 2);
    std::set<std::pair<std::uint64_t, std::uint64_t>> tables;  // (sigma(x,x), sigma(x,z))
    for (const auto& s : found) {
        CHECK(s.unit_values[0] == Scalar::one(G2));
        CHECK(check_hopf_function(s, H1Mode::words, 3).ok());
        tables.insert({s.values[0][0].residue(), s.values[0][1].residue()});
    }
    CHECK(tables == std::set<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {1, 0}});

    // quantum plane over GF(2) with C = k{x}: exactly the sigma_a family
    ExampleBundle qp = example_quantum_plane(G2, Scalar::one(G2), Scalar::one(G2), 4);
    auto qfound = search_hopf_functions(qp.host, *qp.C);
    REQUIRE(qfound.size() == 2);  // a = 0 and a = 1
    for (const auto& s : qfound) {
        CHECK(s.unit_values[0] == Scalar::one(G2));
        CHECK(s.values[0][static_cast<std::size_t>(qp.host->alphabet.id("x"))].is_zero());
    }
}

TEST_CASE("memoized and uncached evaluation agree") {
    std::mt19937 rng(2718);
    Pairing s = sigma_from_r(fk_matrix(G2), 4);
    std::uniform_int_distribution<int> len(0, 5), letter(0, 3), cdist(0, 3);
    for (int i = 0; i < 200; ++i) {
        Word w;
        for (int l = len(rng); l > 0; --l) w.push_back(letter(rng));
        int c = cdist(rng);
        CHECK(s.eval_word(c, w) == s.eval_word_uncached(c, w));
    }
}
