#include "qschur/identities.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace qschur {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<Identity> build_registry() {
    std::vector<Identity> r;
    auto eq = [&r](std::string id, std::string lhs, std::string rhs, std::string anchor,
                   long trunc = 300, std::string note = "") {
        r.push_back({std::move(id), std::move(lhs), std::move(rhs), std::nullopt,
                     std::move(anchor), trunc, std::move(note)});
    };
    auto cong = [&r](std::string id, std::string lhs, std::string rhs, unsigned long m,
                     std::string anchor, long trunc = 300, std::string note = "") {
        r.push_back({std::move(id), std::move(lhs), std::move(rhs), m, std::move(anchor), trunc,
                     std::move(note)});
    };

    // ---- theta special cases -------------------------------------------
    eq("theta_phi_eta", "phi(q)", "f2^5/(f1^2*f4^2)", "sec 2.1 theta special cases");
    eq("theta_phineg_eta", "phi(-q)", "f1^2/f2", "sec 2.1 theta special cases");
    eq("theta_psi_eta", "psi(q)", "f2^2/f1", "sec 2.1 theta special cases");
    eq("theta_psineg_eta", "psi(-q)", "f1*f4/f2", "psi at -q via (-q;-q) = f2^3/(f1 f4)");
    eq("theta_phi_general", "phi(q)", "f(q,q)", "sec 2.1, phi as f(a,b)");
    eq("theta_psi_general", "psi(q)", "f(q,q^3)", "sec 2.1, psi as f(a,b)");

    // ---- generating function forms (Eq. (1) and relatives) -------------
    for (long t : {3L, 5L, 9L}) {
        const std::string st = std::to_string(t);
        eq("eq1_phi_form_t" + st, "schur_over(" + st + ")",
           "phi(-q^2)*phi(-q^" + st + ")/(phi(-q)*phi(-q^" + std::to_string(2 * t) + "))",
           "Eq. (1), phi-quotient form");
        eq("eq1_product_form_t" + st, "schur_over(" + st + ")",
           "poch(-q,q^2)*poch(q^" + st + ",q^" + std::to_string(2 * t) + ")/(poch(-q^" + st +
               ",q^" + std::to_string(2 * t) + ")*poch(q,q^2))",
           "Eq. (1), infinite product form");
        if (t != 9)
            eq("schur_product_form_t" + st, "schur(" + st + ")",
               "poch(q^" + st + ",q^" + std::to_string(2 * t) + ")/poch(q,q^2)",
               "sec 1, S_t generating function");
    }
    eq("overpartition_product", "overpartition", "poch(-q,q)/poch(q,q)",
       "sec 1, Corteel-Lovejoy overpartition generating function");
    eq("podbar_product", "overpartition_odd", "poch(-q,q^2)/poch(q,q^2)",
       "sec 4, overpartitions into odd parts");
    eq("s3k_podbar_factor_k2", "schur_over(9)", "overpartition_odd*f9^2*f36/f18^3",
       "sec 4 proof, S_{3^k} = podbar * f_{3^k}^2 f_{4 3^k} / f_{2 3^k}^3");
    eq("s3k_podbar_factor_k3", "schur_over(27)", "overpartition_odd*f27^2*f108/f54^3",
       "sec 4 proof, k = 3 case");

    // ---- Lemma 2.4: 2-dissections --------------------------------------
    eq("l2_4_inv_f1_4", "1/f1^4", "f4^14/(f2^14*f8^4) + 4*q*f4^2*f8^4/f2^10",
       "Lemma 2.4, 2-dissection of 1/f1^4");
    eq("l2_4_f3sq_f1sq", "f3^2/f1^2",
       "f4^4*f6*f12^2/(f2^5*f8*f24) + 2*q*f4*f6^2*f8*f24/(f2^4*f12)",
       "Lemma 2.4, 2-dissection of f3^2/f1^2");
    eq("l2_4_f3cube_f1", "f3^3/f1", "f4^3*f6^2/(f2^2*f12) + q*f12^3/f4",
       "Lemma 2.4, 2-dissection of f3^3/f1");
    eq("l2_4_f1_f3cube", "f1/f3^3", "f2*f4^2*f12^2/f6^7 - q*f2^3*f12^6/(f4^2*f6^9)",
       "Lemma 2.4, 2-dissection of f1/f3^3");
    eq("l2_4_f3_f1cube", "f3/f1^3", "f4^6*f6^3/(f2^9*f12^2) + 3*q*f4^2*f6*f12^2/f2^7",
       "Lemma 2.4, 2-dissection of f3/f1^3");
    eq("l2_4_f1cube_f3", "f1^3/f3", "f4^3/f12 - 3*q*f2^2*f12^3/(f4*f6^2)",
       "Lemma 2.4, 2-dissection of f1^3/f3");
    eq("l2_4_inv_f1sq_f3sq", "1/(f1^2*f3^2)",
       "f8^5*f24^5/(f2^5*f6^5*f16^2*f48^2) + 2*q*f4^4*f12^4/(f2^6*f6^6)"
       " + 4*q^4*f4^2*f12^2*f16^2*f48^2/(f2^5*f6^5*f8*f24)",
       "Lemma 2.4, 2-dissection of 1/(f1^2 f3^2)", 300,
       "printed third term has f16^4; the identity holds with f16^2");
    eq("l2_4_inv_f1f3", "1/(f1*f3)",
       "f8^2*f12^5/(f2^2*f4*f6^4*f24^2) + q*f4^5*f24^2/(f2^4*f6^2*f8^2*f12)",
       "Lemma 2.4, 2-dissection of 1/(f1 f3)");
    eq("l2_4_f1f3", "f1*f3", "f2*f8^2*f12^4/(f4^2*f6*f24^2) - q*f4^4*f6*f24^2/(f2*f8^2*f12^2)",
       "Lemma 2.4, 2-dissection of f1 f3");

    // ---- Lemma 2.5: 3-dissections of f1 f2 and 1/(f1 f2) ----------------
    eq("l2_5_f1f2", "f1*f2", "f6*f9^4/(f3*f18^2) - q*f9*f18 - 2*q^2*f3*f18^4/(f6*f9^2)",
       "Lemma 2.5, 3-dissection of f1 f2");
    eq("l2_5_inv_f1f2", "1/(f1*f2)",
       "f9^9/(f3^6*f6^2*f18^3) + q*f9^6/(f3^5*f6^3) + 3*q^2*f9^3*f18^3/(f3^4*f6^4)"
       " - 2*q^3*f18^6/(f3^3*f6^5) + 4*q^4*f18^9/(f3^2*f6^6*f9^3)",
       "Lemma 2.5, 3-dissection of 1/(f1 f2)");

    // ---- Lemma 2.6: Ramanujan 5-dissection of f1 ------------------------
    eq("l2_6_f1_5diss", "f1",
       "f25*(poch(q^10,q^25)*poch(q^15,q^25)/(poch(q^5,q^25)*poch(q^20,q^25)) - q"
       " - q^2*poch(q^5,q^25)*poch(q^20,q^25)/(poch(q^10,q^25)*poch(q^15,q^25)))",
       "Lemma 2.6, f1 = f25 (a - q - q^2/a)", 300,
       "printed a repeats (q^10;q^25) in the denominator; the classical form with "
       "(q^20;q^25) is registered and verifies, the printed form does not");

    // ---- Lemma 2.7: 3-dissections of f4/f1 and f1/f4 --------------------
    eq("l2_7_f4_f1", "f4/f1",
       "f12*f18^4/(f3^3*f36^2) + q*f6^2*f9^3*f36/(f3^4*f18^2) + 2*q^2*f6*f18*f36/f3^3",
       "Lemma 2.7, 3-dissection of f4/f1");
    eq("l2_7_f1_f4", "f1/f4",
       "f6*f9*f18/f12^3 - q*f3*f18^4/(f9^2*f12^3) - q^2*f6^2*f9*f36^3/(f12^4*f18^2)",
       "Lemma 2.7, 3-dissection of f1/f4");

    // ---- Lemma 2.8: 2-dissections of f9/f1 and f9^2/f1^2 ----------------
    eq("l2_8_f9_f1", "f9/f1", "f12^3*f18/(f2^2*f6*f36) + q*f4^2*f6*f36/(f2^3*f12)",
       "Lemma 2.8, 2-dissection of f9/f1");
    eq("l2_8_f9sq_f1sq", "f9^2/f1^2",
       "f12^6*f18^2/(f2^4*f6^2*f36^2) + 2*q*f4^2*f12^2*f18/f2^5 + q^2*f4^4*f6^2*f36^2/(f2^6*f12^2)",
       "Lemma 2.8, square of the f9/f1 dissection");

    // ---- Lemma 2.9: f2^3/f1^3 and f2/f1^2 -------------------------------
    eq("l2_9_f2cube_f1cube", "f2^3/f1^3",
       "f6/f3 + 3*q*f6^4*f9^5/(f3^8*f18) + 6*q^2*f6^3*f9^2*f18^2/f3^7 + 12*q^3*f6^2*f18^5/(f3^6*f9)",
       "Lemma 2.9, 3-dissection of f2^3/f1^3");
    eq("l2_9_f2_f1sq", "f2/f1^2",
       "f6^4*f9^6/(f3^8*f18^3) + 2*q*f6^3*f9^3/f3^7 + 4*q^2*f6^2*f18^3/f3^6",
       "Lemma 2.9, 3-dissection of f2/f1^2");
    // the phi-product form of f2/f1^2 is N-dependent; see builder below
    r.push_back({"l2_9_phi_product", "f2/f1^2", "", std::nullopt,
                 "Lemma 2.9, f2/f1^2 = phi(q) phi(q^2)^2 phi(q^4)^4 ...", 256, ""});

    // ---- Lemma 2.10: f2^2/f1 and psi(-q) dissections ---------------------
    eq("l2_10_f2sq_f1", "f2^2/f1", "f6*f9^2/(f3*f18) + q*f18^2/f9",
       "Lemma 2.10, 3-dissection of f2^2/f1");
    eq("l2_10_psineg_A", "psi(-q)", "a_cubed - q*psi(-q^9)",
       "Lemma 2.10, psi(-q) = A(q^3) - q psi(-q^9)");
    eq("l2_10_psineg_P", "psi(-q)", "dilate(p_neg,3) - q*psi(-q^9)",
       "Lemma 2.10, psi(-q) = P(-q^3) - q psi(-q^9)");
    eq("l2_10_pneg_eta", "p_neg", "f1*f4*f6^5/(f2^2*f3^2*f12^2)",
       "Lemma 2.10, P(-q) sum form vs eta quotient");
    eq("l2_10_acubed_vs_pneg", "a_cubed", "dilate(p_neg,3)",
       "Lemma 2.10, A(q^3) equals P(-q^3)");

    // ---- Lemma 2.11 -----------------------------------------------------
    eq("l2_11_phineg_3diss", "phi(-q)", "phi(-q^9) - 2*q*f3*f18^2/(f6*f9)",
       "Lemma 2.11, 3-dissection of phi(-q)");

    // ---- Lemma 2.12: Son's identity --------------------------------------
    eq("l2_12_son", "f2^4*f3^8/(f1^8*f6^4)", "1 + 8*q*f2*f6^5/(f1^5*f3)",
       "Lemma 2.12, Son Eq. 5.1");

    // ---- sec 5 proof chain for schur_over(3) ------------------------------
    eq("s3_2diss", "schur_over(3)",
       "f4^3*f12^3/(f2^2*f6^2*f8*f24) + 2*q*f8*f24/(f2*f6)",
       "sec 5, Eq. (1) at t=3 after the f3^2/f1^2 dissection");
    eq("a1", "extract(schur_over(3),2,0)", "f2^3*f6^3/(f1^2*f3^2*f4*f12)", "sec 5 Eq. (a1)");
    eq("a2", "extract(schur_over(3),2,1)", "2*f4*f12/(f1*f3)", "sec 5 Eq. (a2)");
    cong("a3", "extract(schur_over(3),2,0)", "f1*f2^3*f6^3/(f3^3*f4*f12)", 3, "sec 5 Eq. (a3)");
    cong("a4_form1", "extract(schur_over(3),4,0)", "f1^4*f2*f6/f3^4", 3, "sec 5 Eq. (a4)");
    cong("a4_form2", "extract(schur_over(3),4,0)", "f1*f2*f6/f3^3", 3, "sec 5 Eq. (a4)");
    cong("a5", "extract(schur_over(3),4,0)",
         "f6^2*f9^4/(f3^4*f18^2) - q*f6*f9*f18/f3^3 - 2*q^2*f18^4/(f3^2*f9^2)", 3,
         "sec 5 Eq. (a5)");
    cong("a6_form1", "extract(schur_over(3),12,0)", "f2^2*f3^4/(f1^4*f6^2)", 3, "sec 5 Eq. (a6)");
    cong("a6_form2", "extract(schur_over(3),12,0)", "f2^2*f3^3/(f1*f6^2)", 3, "sec 5 Eq. (a6)");
    cong("a7", "extract(schur_over(3),12,4)", "2*f2*f3*f6/f1^3", 3, "sec 5 Eq. (a7)");
    cong("a8_form1", "extract(schur_over(3),24,0)", "f2^3/f6", 3, "sec 5 Eq. (a8)");
    cong("a8_form2", "extract(schur_over(3),24,0)", "1", 3, "sec 5 Eq. (a8)");
    cong("a9_form1", "extract(schur_over(3),24,12)", "f1^2*f6^3/(f2*f3^2)", 3, "sec 5 Eq. (a9)");
    cong("a9_form2", "extract(schur_over(3),24,12)", "f2^2*f6^2/(f1*f3)", 3, "sec 5 Eq. (a9)");
    cong("a9_psi", "extract(schur_over(3),24,12)", "psi(q)*psi(q^3)", 3,
         "Theorem 5.1, psi(q) psi(q^3) congruence");
    cong("a10", "extract(schur_over(3),12,4)",
         "2*f4^6*f6^4/(f2^8*f12^2) + 6*q^2*f4^2*f6^2*f12^2/f2^6", 3, "sec 5 Eq. (a10)");
    cong("a11_form1", "extract(schur_over(3),24,4)", "2*f2^6*f3^4/(f1^8*f6^2)", 3,
         "sec 5 Eq. (a11)");
    cong("a11_2f14", "extract(schur_over(3),24,4)", "2*f1^4", 3,
         "Theorem 5.1, 2 f1^4 congruence");
    cong("s3_mod3_form", "schur_over(3)", "f1*f3*f12/(f4*f6^2)", 3,
         "sec 5, Eq. (1) at t=3 reduced by the binomial lemma");
    cong("sel_pre_form1", "extract(schur_over(3),3,0)", "f1*f3*f6/(f2*f4^2)", 3,
         "sec 5, 3n extraction");
    cong("sel_pre_form2", "extract(schur_over(3),3,0)", "f1*f3*f4*f6/(f2*f12)", 3,
         "sec 5, 3n extraction, psi(-q) form");
    cong("sel01", "extract(schur_over(3),3,0)", "(dilate(p_neg,3) - q*psi(-q^9))*f3*f6/f12", 3,
         "sec 5 Eq. (sel01)");
    cong("s3_9n6_zero", "extract(schur_over(3),9,6)", "0", 3,
         "Theorem 5.1, 9n+6 congruence (no q^{3n+2} terms in (sel01))");
    cong("s3_9n_pneg", "extract(schur_over(3),9,0)", "p_neg*f1*f2/f4", 3, "sec 5, 9n extraction");
    cong("s3_9n_eta", "extract(schur_over(3),9,0)", "f1^2*f6^5/(f2*f3^2*f12^2)", 3,
         "sec 5, 9n extraction");
    cong("s3_9n_phineg", "extract(schur_over(3),9,0)", "phi(-q)*f6^5/(f3^2*f12^2)", 3,
         "sec 5, 9n extraction, phi(-q) form");
    cong("s3_27n_phineg", "extract(schur_over(3),27,0)", "phi(-q^3)*f2^5/(f1^2*f4^2)", 3,
         "sec 5, 27n extraction");
    cong("s3_27n_eta", "extract(schur_over(3),27,0)", "f2^5*f3^2/(f1^2*f4^2*f6)", 3,
         "sec 5, 27n extraction");

    eq("g01", "extract(schur_over(3),4,0)",
       "f4^5*f12^5/(f1^2*f2*f3^2*f6*f8^2*f24^2) + 4*q^2*f2*f6*f8^2*f24^2/(f1^2*f3^2*f4*f12)",
       "sec 5 Eq. (g01)", 300,
       "printed second term has f8^4; the identity holds with f8^2 (inherited from the "
       "1/(f1^2 f3^2) dissection)");
    eq("g1", "extract(schur_over(3),4,2)", "2*f2^3*f6^3/(f1^3*f3^3)", "sec 5 Eq. (g1)");
    eq("g1_3diss", "extract(schur_over(3),4,2)",
       "2*f6^4/f3^4 + 6*q*f6^7*f9^5/(f3^11*f18) + 12*q^2*f6^6*f9^2*f18^2/f3^10"
       " + 24*q^3*f6^5*f18^5/(f3^9*f9)",
       "sec 5, (g1) after the f2^3/f1^3 dissection");
    cong("g2_form1", "extract(schur_over(3),12,2)", "2*f2^4/f1^4 + 24*q*f2^5*f6^5/(f1^9*f3)", 8,
         "sec 5 Eq. (g2)");
    cong("g2_2f14", "extract(schur_over(3),12,2)", "2*f1^4", 8,
         "Theorem 5.4, 2 f1^4 congruence mod 8");

    cong("f1_thm52", "extract(schur_over(3),120,100)", "2*f5^4", 3, "sec 5 Eq. (f1)", 150);
    cong("f2_thm52", "extract(schur_over(3),600,100)", "2*f1^4", 3, "sec 5 Eq. (f2)", 100);

    eq("ra_pre", "extract(schur_over(3),4,1)", "2*f4^2*f6^6/(f1^2*f3^4*f12^2)",
       "sec 5, 4n+1 extraction", 300,
       "printed numerator has f6^2; the identity holds with f6^6");
    cong("ra1", "extract(schur_over(3),4,1)", "2*f1*f6^6/(f4*f3^5*f12)", 6, "sec 5 Eq. (ra1)");
    cong("ra2_form1", "extract(schur_over(3),12,9)", "4*f2^8*f3*f12^3/(f1^5*f4^5*f6^2)", 6,
         "sec 5 Eq. (ra2)");
    cong("ra2_form2", "extract(schur_over(3),12,9)", "4*f1*f4*f6*f12/(f2*f3)", 6,
         "sec 5 Eq. (ra2)");
    cong("ra2_psineg", "extract(schur_over(3),12,9)", "4*psi(-q)*f6*f12/f3", 6,
         "sec 5 Eq. (ra2)");
    cong("ra3", "extract(schur_over(3),36,9)", "4*f4^2*f6^5/(f2*f3^2*f12^2)", 6,
         "sec 5 Eq. (ra3)");
    cong("ra4_zero", "extract(schur_over(3),36,33)", "0", 6, "sec 5 Eq. (ra4)");
    cong("ra_mid", "extract(schur_over(3),36,9)",
         "4*f6^4*f18^2/(f3^2*f12*f36) + 4*q^2*f6^5*f36^2/(f3^2*f12^2*f18)", 6,
         "sec 5, (ra3) after the f2^2/f1 dissection");
    cong("ra5_zero", "extract(schur_over(3),108,45)", "0", 6, "sec 5 Eq. (ra5)", 150);
    cong("ra6_form1", "extract(schur_over(3),108,81)", "4*f2^5*f12^2/(f1^2*f4^2*f6)", 6,
         "sec 5 Eq. (ra6)", 150);
    cong("ra6_form2", "extract(schur_over(3),108,81)", "4*f1*f4*f6*f12/(f2*f3)", 6,
         "sec 5 Eq. (ra6)", 150,
         "printed middle form reads 4 f1f2f6f12/(f2f3); the psi(-q) form with f4 is what holds");
    cong("ra7", "extract(schur_over(3),324,81)", "4*f4^2*f6^5/(f2*f3^2*f12^2)", 6,
         "sec 5 Eq. (ra7)", 100);
    cong("ra8_zero", "extract(schur_over(3),324,297)", "0", 6, "sec 5 Eq. (ra8)", 100);
    cong("ra9_zero", "extract(schur_over(3),972,405)", "0", 6, "sec 5 Eq. (ra9)", 60);
    cong("ra10", "extract(schur_over(3),972,729)", "4*f2^5*f12^2/(f1^2*f4^2*f6)", 6,
         "sec 5 Eq. (ra10)", 60);

    // ---- sec 4 proof chain ------------------------------------------------
    eq("hs3_k2", "extract(schur_over(9),3,0)", "extract(overpartition_odd,3,0)*f3^2*f12/f6^3",
       "sec 4 Eq. (hs3) at k=2");
    eq("hs3_k3", "extract(schur_over(27),3,0)", "extract(overpartition_odd,3,0)*f9^2*f36/f18^3",
       "sec 4 Eq. (hs3) at k=3");
    eq("hs4_k2", "extract(schur_over(9),9,6)", "extract(overpartition_odd,9,6)*f1^2*f4/f2^3",
       "sec 4 Eq. (hs4) at k=2");
    eq("hs4_k3", "extract(schur_over(27),9,6)", "extract(overpartition_odd,9,6)*f3^2*f12/f6^3",
       "sec 4 Eq. (hs4) at k=3");
    cong("hs1_podbar", "extract(overpartition_odd,9,6)", "0", 3,
         "sec 4 Eq. (hs1), Hirschhorn-Sellers");
    cong("hs2_podbar", "extract(overpartition_odd,27,0)", "extract(overpartition_odd,3,0)", 3,
         "sec 4 Eq. (hs2), Hirschhorn-Sellers");

    // ---- sec 6 proof chain for schur_over(9) -------------------------------
    eq("h1", "schur_over(9)",
       "f12^6/(f2*f4*f6^2*f18*f36) + 2*q*f4*f12^2*f36/(f2^2*f18^2)"
       " + q^2*f4^3*f6^2*f36^3/(f2^3*f12^2*f18^3)",
       "sec 6 Eq. (h1)");
    eq("h2", "extract(schur_over(9),2,0)",
       "f6^6/(f1*f2*f3^2*f9*f18) + q*f2^3*f3^2*f18^3/(f1^3*f6^2*f9^3)", "sec 6 Eq. (h2)");
    eq("h3", "extract(schur_over(9),2,1)", "2*f2*f6^2*f18/(f1^2*f9^2)", "sec 6 Eq. (h3)");
    eq("h2_3diss", "extract(schur_over(9),2,0)",
       "f6^4*f9^8/(f3^8*f18^4) + q*(f6^3*f9^5/(f3^7*f18) + f3*f18^3/(f6*f9^3))"
       " + 6*q^2*f6^2*f9^2*f18^2/f3^6 + 4*q^3*f6*f18^5/(f3^5*f9) + 16*q^4*f18^8/(f3^4*f9^4)",
       "sec 6, (h2) after the 1/(f1 f2) and f2^3/f1^3 dissections", 300,
       "printed first q-term reads f6^3 f9^5/(f3^7 f9); the denominator must be f3^7 f18");
    eq("h3_3diss", "extract(schur_over(9),2,1)",
       "2*f6^6*f9^4/(f3^8*f18^2) + 4*q*f6^5*f9*f18/f3^7 + 8*q^2*f6^4*f18^4/(f3^6*f9^2)",
       "sec 6, (h3) after the f4/f1 dissection");
    eq("h4", "extract(schur_over(9),6,0)", "f2^4*f3^8/(f1^8*f6^4) + 4*q*f2*f6^5/(f1^5*f3)",
       "sec 6 Eq. (h4)");
    eq("dis1", "extract(schur_over(9),6,0)", "1 + 12*q*f2*f6^5/(f1^5*f3)",
       "Theorem 6.1 Eq. (dis1)");
    eq("dis2", "extract(schur_over(9),6,1)", "2*f2^6*f3^4/(f1^8*f6^2)", "Theorem 6.1 Eq. (dis2)");
    eq("dis3", "extract(schur_over(9),6,2)",
       "f2^3*f3^5/(f1^7*f6) + f1*f6^3/(f2*f3^3) + 16*q*f6^8/(f1^4*f3^4)",
       "Theorem 6.1 Eq. (dis3)");
    eq("dis4", "extract(schur_over(9),6,3)", "4*f2^5*f3*f6/f1^7", "Theorem 6.1 Eq. (dis4)");
    eq("dis5", "extract(schur_over(9),6,4)", "6*f2^2*f3^2*f6^2/f1^6", "Theorem 6.1 Eq. (dis5)");
    eq("dis6", "extract(schur_over(9),6,5)", "8*f2^4*f6^4/(f1^6*f3^2)", "Theorem 6.1 Eq. (dis6)");
    cong("dis2_mod6", "extract(schur_over(9),6,1)", "2*f1^4", 6,
         "sec 6, Theorem 6.3 chain: (dis2) with the binomial lemma");
    cong("dis4_mod12", "extract(schur_over(9),6,3)", "4*psi(q)*psi(q^3)", 12,
         "sec 6, Theorem 6.4 chain: (dis4) with the binomial lemma");
    cong("m16_step1", "extract(schur_over(9),12,11)", "16*f2^18*f6^4/(f1^16*f3^2*f4^4)", 32,
         "sec 6, 12n+11 extraction mod 32");
    cong("m16_step2", "extract(schur_over(9),12,11)", "16*f2^10*f6^3/f4^4", 32,
         "sec 6, same reduced by the binomial lemma");
    eq("l3", "extract(schur_over(9),6,4)",
       "6*f4^12*f6^8/(f2^16*f12^4) + 36*q*f4^8*f6^6/f2^14 + 54*q^2*f4^4*f6^4*f12^4/f2^12",
       "sec 6 Eq. (l3)", 300, "printed middle coefficient is 18; squaring gives 36");
    eq("l4", "extract(schur_over(9),12,4)",
       "6*f2^12*f3^8/(f1^16*f6^4) + 54*q*f2^4*f3^4*f6^4/f1^12", "sec 6 Eq. (l4)");
    cong("l5_step1", "extract(schur_over(9),12,4)", "6*f2^12*f3^8/(f1^16*f6^4)", 9,
         "sec 6 Eq. (l5)");
    cong("l5", "extract(schur_over(9),12,4)", "6*f1^2*f2^3*f3^2/f6", 9, "sec 6 Eq. (l5)");
    cong("l6", "extract(schur_over(9),24,16)", "6*f1^3*f2^2*f6^2/f3", 9, "sec 6 Eq. (l6)");
    cong("l7", "extract(schur_over(9),24,16)", "6*f2^2*f6^2*f4^3/f12 - 18*q*f2^4*f12^3/f4", 9,
         "sec 6 Eq. (l7)", 300, "printed second term is missing its factor q");
    cong("l8", "extract(schur_over(9),48,16)", "6*f1^2*f2^3*f3^2/f6", 9, "sec 6 Eq. (l8)", 200);
    cong("l9_zero", "extract(schur_over(9),48,40)", "0", 9, "sec 6 Eq. (l9)", 200);
    cong("l10", "extract(schur_over(9),96,64)", "6*f1^3*f2^2*f6^2/f3", 9, "sec 6 Eq. (l10)", 150);
    cong("l11", "extract(schur_over(9),192,64)", "6*f1^2*f2^3*f3^2/f6", 9, "sec 6 Eq. (l11)",
         100);
    cong("l12_zero", "extract(schur_over(9),192,160)", "0", 9, "sec 6 Eq. (l12)", 100);

    return r;
}

// N-dependent right sides that the fixed grammar cannot express.
SeriesSpec build_phi_product(long trunc) {
    SeriesSpec acc = SeriesSpec::integer(1);
    for (long p2 = 1, i = 0; p2 < trunc; p2 *= 2, ++i)
        acc = acc * pow(SeriesSpec::phi(+1, p2), p2);
    return acc;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

const std::vector<Identity>& identity_registry() {
    static const std::vector<Identity> registry = build_registry();
    return registry;
}

const Identity* find_identity(const std::string& id) {
    for (const auto& ident : identity_registry())
        if (ident.id == id) return &ident;
    return nullptr;
}

VerificationReport verify_identity(const std::string& id, long trunc) {
    const Identity* ident = find_identity(id);
    if (!ident) throw std::invalid_argument("verify_identity: unknown id '" + id + "'");
    return verify_identity(*ident, trunc);
}

VerificationReport verify_identity(const Identity& ident, long trunc) {
    const auto start = Clock::now();
    const long N = trunc > 0 ? trunc : ident.default_trunc;
    if (N < 2) throw std::invalid_argument("verify_identity: trunc must be >= 2");

    std::optional<Int> mod;
    if (ident.congruence_mod) mod = Int(*ident.congruence_mod);

    const TruncSeries lhs = expand(parse_spec(ident.lhs), N, mod);
    TruncSeries rhs = ident.id == "l2_9_phi_product"
                          ? expand(build_phi_product(N), N, mod)
                          : expand(parse_spec(ident.rhs), N, mod);

    VerificationReport rep;
    rep.claim_id = ident.id;
    rep.params = {{"lhs", ident.lhs},
                  {"rhs", ident.id == "l2_9_phi_product" ? "phi-product" : ident.rhs},
                  {"relation", ident.congruence_mod
                                   ? "congruent mod " + std::to_string(*ident.congruence_mod)
                                   : "equal"},
                  {"anchor", ident.anchor},
                  {"trunc", N}};
    if (!ident.note.empty()) rep.params["note"] = ident.note;
    rep.n_max = N - 1;
    rep.verdict = Verdict::verified;
    for (long i = 0; i < N; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            rep.verdict = Verdict::counterexample;
            rep.counterexample = Counterexample{i, lhs.coeff(i), rhs.coeff(i)};
            break;
        }
    }
    rep.ms = elapsed_ms(start);
    return rep;
}

VerificationReport verify_psi_dissection(long p, long trunc) {
    const auto start = Clock::now();
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("verify_psi_dissection: p must be an odd prime");
    if (trunc < 2) throw std::invalid_argument("verify_psi_dissection: trunc must be >= 2");

    VerificationReport rep;
    rep.claim_id = "cuigu_psi_p" + std::to_string(p);
    rep.params = {{"p", p}, {"trunc", trunc}, {"anchor", "Cui-Gu psi p-dissection"}};
    rep.n_max = trunc - 1;

    // side condition: (m^2+m)/2 misses (p^2-1)/8 mod p for 0 <= m <= (p-3)/2
    const long target = ((p * p - 1) / 8) % p;
    for (long m = 0; m <= (p - 3) / 2; ++m) {
        if ((m * (m + 1) / 2) % p == target) {
            rep.verdict = Verdict::counterexample;
            rep.counterexample = Counterexample{m, (m * (m + 1) / 2) % p, target};
            rep.params["failure"] = "side condition";
            rep.ms = elapsed_ms(start);
            return rep;
        }
    }

    SeriesSpec sum = SeriesSpec::integer(0);
    for (long k = 0; k <= (p - 3) / 2; ++k) {
        SeriesSpec piece = SeriesSpec::monomial(1, k * (k + 1) / 2) *
                           SeriesSpec::theta(+1, (p * p + (2 * k + 1) * p) / 2, +1,
                                             (p * p - (2 * k + 1) * p) / 2);
        sum = sum + piece;
    }
    sum = sum + SeriesSpec::monomial(1, (p * p - 1) / 8) * SeriesSpec::psi(+1, p * p);

    const TruncSeries lhs = theta_psi(+1, trunc);
    const TruncSeries rhs = expand(sum, trunc);
    rep.verdict = Verdict::verified;
    for (long i = 0; i < trunc; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) {
            rep.verdict = Verdict::counterexample;
            rep.counterexample = Counterexample{i, lhs.coeff(i), rhs.coeff(i)};
            break;
        }
    rep.ms = elapsed_ms(start);
    return rep;
}

VerificationReport verify_f1_dissection(long p, long trunc) {
    const auto start = Clock::now();
    if (!is_prime(p) || p < 5)
        throw std::invalid_argument("verify_f1_dissection: p must be a prime >= 5");
    if (trunc < 2) throw std::invalid_argument("verify_f1_dissection: trunc must be >= 2");

    const long excluded = (p % 6 == 1) ? (p - 1) / 6 : (-p - 1) / 6;

    SeriesSpec sum = SeriesSpec::integer(0);
    for (long k = (1 - p) / 2; k <= (p - 1) / 2; ++k) {
        if (k == excluded) continue;
        const long sh = k * (3 * k + 1) / 2;
        SeriesSpec piece = SeriesSpec::monomial((k % 2) ? -1 : 1, sh) *
                           SeriesSpec::theta(-1, (3 * p * p + (6 * k + 1) * p) / 2, -1,
                                             (3 * p * p - (6 * k + 1) * p) / 2);
        sum = sum + piece;
    }
    const long tail_sign = (((excluded % 2) + 2) % 2) ? -1 : 1;
    sum = sum + SeriesSpec::monomial(tail_sign, (p * p - 1) / 24) * SeriesSpec::eta(p * p, 1);

    VerificationReport rep;
    rep.claim_id = "cuigu_f1_p" + std::to_string(p);
    rep.params = {{"p", p},
                  {"trunc", trunc},
                  {"excluded_k", excluded},
                  {"anchor", "Cui-Gu f1 p-dissection"}};
    rep.n_max = trunc - 1;

    const TruncSeries lhs = eta_power(1, 1, trunc);
    const TruncSeries rhs = expand(sum, trunc);
    rep.verdict = Verdict::verified;
    for (long i = 0; i < trunc; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) {
            rep.verdict = Verdict::counterexample;
            rep.counterexample = Counterexample{i, lhs.coeff(i), rhs.coeff(i)};
            break;
        }
    rep.ms = elapsed_ms(start);
    return rep;
}

VerificationReport verify_p_dissection_lemma(DissectionLemma which, long p, long trunc) {
    return which == DissectionLemma::psi ? verify_psi_dissection(p, trunc)
                                         : verify_f1_dissection(p, trunc);
}

}  // namespace qschur
