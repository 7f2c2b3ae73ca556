// Frozen reference values used by the unit and acceptance tests.
// Generated by tools/reference_values.py (exact rational arithmetic and
// 60-digit floating point; every value is asserted against an independent
// consistency check before being written here).  Do not edit by hand.
#pragma once

#include <array>

namespace refvals {

// 3F2(-2,1,1;2,2;1), exact 11/18 by rational term sum
inline constexpr double pfq_3f2_m2_1_1__2_2__1 = 0.61111111111111111;

// 2F1(-3,1/2;1/3;2/5), exact rational term sum
inline constexpr double pfq_2f1_m3_half__third__2_5 = -0.10571428571428571;

// 4F3(-4,7/3,1/5,-9/4;1/2,5/3,11/7;1), exact rational term sum
inline constexpr double pfq_4f3_at_1 = 6.6545465454545455;

// L_2(1), exact -1/2
inline constexpr double laguerre_2_0_1 = -0.50000000000000000;

// L_3^(3/2)(7/4), exact rational
inline constexpr double laguerre_3_3half_7quarter = -1.2213541666666667;

// L_5^(0.3)(0.9), exact rational
inline constexpr double laguerre_5_a3_10_x9_10 = -0.78074800000000000;

// P_n(3/4; 0.3, 0.45) n=0..6, exact monic recurrence / sqrt(mu-factorial)
inline constexpr std::array<double, 7> chihara_vals_lam3_4_mu3_10_gam9_20 = {1.0000000000000000, 0.23717082451262845, -0.69318107302493481, -0.28637824638055175, 0.48578235867515815, 0.30361794748616934, -0.32056853546249892};

// P_2(2; 0.5, 0) = 1, exact
inline constexpr double chihara_P2_lam2_mu_half_gam0 = 1.0000000000000000;

// J_n(0.7; 0.5, 1.2, 0.3) n=0..6, exact recurrence (== closed form exactly)
inline constexpr std::array<double, 7> bigjacobi_vals_x7_10_a1_2_b6_5_c3_10 = {1.0000000000000000, 0.43076923076923077, -0.82197802197802198, -0.92537616229923922, -0.42872116894094916, 0.016338123415046492, 0.78316947999298302};

// h_n(0.5, 1.2) n=0..6, 60-digit gamma evaluation
inline constexpr std::array<double, 7> bigjacobi_h_0p5_1p2 = {1.2328546366473908, 1.8081868004161731, 0.97739827049522871, 1.1728779245942745, 0.82307222778545575, 0.92782687495815012, 0.72298198048687023};

// h_1(1,1)
inline constexpr double bigjacobi_h1_11 = 1.0000000000000000;

// R_n(y_1; 0.3, 0.7, 4) n=0..4, exact recurrence at the s=1 grid point
inline constexpr std::array<double, 5> dualhahn_vals_even = {1.0000000000000000, 12.000000000000000, 57.600000000000000, 345.60000000000000, 737.28000000000000};

// grid y_s for (0.3, 0.7, N=4)
inline constexpr std::array<double, 5> dualhahn_grid_even = {-11.000000000000000, 9.0000000000000000, -7.0000000000000000, 5.0000000000000000, -3.0000000000000000};

// weights for (0.3, 0.7, N=4), exact; gram identity asserted
inline constexpr std::array<double, 5> dualhahn_weights_even = {1.0000000000000000, 0.66666666666666667, 2.7272727272727273, 1.3636363636363636, 1.8181818181818182};

// norms for (0.3, 0.7, N=4), exact
inline constexpr std::array<double, 5> dualhahn_norms_even = {7.5757575757575758, 290.90909090909091, 8378.1818181818182, 294912.00000000000, 7549747.2000000000};

// grid y_s for (0.35, 0.55, N=5)
inline constexpr std::array<double, 6> dualhahn_grid_odd = {2.8000000000000000, -4.8000000000000000, 6.8000000000000000, -8.8000000000000000, 10.800000000000000, -12.800000000000000};

// weights for (0.35, 0.55, N=5), exact; gram identity asserted
inline constexpr std::array<double, 6> dualhahn_weights_odd = {1.0000000000000000, 1.2352941176470588, 0.95798319327731092, 1.0615489439018851, 0.26088914723012430, 0.27919715756206285};

// norms for (0.35, 0.55, N=5), exact
inline constexpr std::array<double, 6> dualhahn_norms_odd = {4.7949125596184420, 229.58041335453100, 7346.5732273449921, 445790.06343529412, 14265282.029929412, 591723898.60147200};

// reversed grid z_s for (0.3, 0.7, N=4)
inline constexpr std::array<double, 5> dualhahn_rev_points_even = {-3.0000000000000000, 5.0000000000000000, -7.0000000000000000, 9.0000000000000000, -11.000000000000000};

// reversed weights for (0.3, 0.7, N=4)
inline constexpr std::array<double, 5> dualhahn_rev_weights_even = {1.8181818181818182, 1.3636363636363636, 2.7272727272727273, 0.66666666666666667, 1.0000000000000000};

// rho1, rho2, r1, r2 with r2-rho1 = 5/2 (N=4)
inline constexpr std::array<double, 4> bi_even_params = {1.1000000000000000, 4.2000000000000000, 0.20000000000000000, 3.6000000000000000};

// B_n(0) at the N=4 parameter set, exact recurrence (== closed form exactly)
inline constexpr std::array<double, 7> bi_vals_even_x0 = {1.0000000000000000, -2.2200000000000000, -5.3700000000000000, 12.467000000000000, 19.553481818181818, -46.618110000000000, -36.362125800000000};

// grid x_k, N=4
inline constexpr std::array<double, 5> bi_grid_even = {1.1000000000000000, -2.1000000000000000, 2.1000000000000000, -3.1000000000000000, 3.1000000000000000};

// weights w_k, N=4, exact; gram identity asserted
inline constexpr std::array<double, 5> bi_weights_even = {1.0000000000000000, 0.29914529914529915, 2.8717948717948718, 0.39702233250620347, 5.5330475975637266};

// norms h_n, N=4, exact
inline constexpr std::array<double, 5> bi_norms_even = {10.101010101010101, 22.400000000000000, 80.640000000000000, 110.38720000000000, 335.65007127272727};

// rho1, rho2, r1, r2 with rho1+rho2 = -3 (N=5)
inline constexpr std::array<double, 4> bi_odd_params = {1.1000000000000000, -4.1000000000000000, 0.20000000000000000, -4.7000000000000000};

// grid x_k, N=5
inline constexpr std::array<double, 6> bi_grid_odd = {1.1000000000000000, -2.1000000000000000, 2.1000000000000000, -3.1000000000000000, 3.1000000000000000, -4.1000000000000000};

// weights w_k, N=5, exact; gram identity asserted
inline constexpr std::array<double, 6> bi_weights_odd = {1.0000000000000000, 1.5806451612903226, 1.6316337148803330, 4.8616024973985432, 1.4179673950745751, 9.5729760500010788};

// norms h_n, N=5, exact
inline constexpr std::array<double, 6> bi_norms_odd = {20.064824818644853, 118.35870967741935, 265.70322580645161, 1351.7090683870968, 2033.1491772434018, 7577.6360090530909};

// 4x4 coupling matrix, rows n1=0..3, cols j=0..3, mu=(0.6,0.9), eps=(+,+); unitarity asserted
inline constexpr std::array<double, 16> cg_total3_mu1_3_5_mu2_9_10 = {0.61967733539318670, -0.54928524986047615, -0.40941305257532718, 0.38297084310253524, 0.41952353926806062, 0.47328638264796928, -0.52915026221291812, -0.56568542494923802, 0.41952353926806062, -0.37186787208054729, 0.60474315681476356, -0.56568542494923802, 0.51380930314660516, 0.57965506984757754, 0.43204937989385735, 0.46188021535170061};

// 3x3 recoupling matrix, rows j12, cols j23, mu=(0.6,0.9,1.3), eps3=+1; orthogonality asserted
inline constexpr std::array<double, 9> racah_j123_2_mu_6_9_13 = {0.49749371855330998, -0.21408720964441882, 0.84063468086123277, 0.30000000000000000, -0.86681055843689806, -0.39829568888240923, 0.81394102980498532, 0.45034000760423184, -0.36700664510471797};

// two-step normalization factor at lambda2=3, A=0.9, B=0.6, c=0.2, eps product +1
inline constexpr double k_factor_j2 = 2.7015416474167621;

// two-fold identity LHS at N=2, j=1, lam=(1.2,2.3), c=0.2, mu=(0.6,0.9), eps=(+,+); equality asserted
inline constexpr double conv1_pin_lhs = -0.032024493467003999;

// theta_f at j12=1, j123=3, pinned spectral point
inline constexpr double theta_f_pin = 0.011789410226130457;

// theta_g at j23=2, j123=3, same point
inline constexpr double theta_g_pin = -0.054174630872790727;

// generating function at lambda=1.3, z=0.7, mu=0.8, gamma=0.25; all three forms asserted equal
inline constexpr double genfun_pin_pos = 1.1490816623754272;

// generating function at z=-0.9 (sign handling pin)
inline constexpr double genfun_pin_neg = 0.56965395812420298;

// coupled-basis realization at N=2, j=1, z=(0.5,0.8), mu=(0.6,0.9), eps2=+1; CG-sum equality asserted
inline constexpr double coupled_pin_N2_j1 = -0.015429545423801626;

// coupled-basis realization at N=3, j=2, z2<0 (parity extension pin)
inline constexpr double coupled_pin_N3_j2_negz2 = -0.0019968113897727905;

// bilinear identity LHS at the pinned draw; truncated-sum equality asserted separately
inline constexpr double bilinear_pin_lhs = 1.1337567555496967;

// integral of the two-branch weight times J_0^2 for (a,b,c)=(0.5,0.5,0.25); quadrature asserted
inline constexpr double bigjacobi_mass_0 = 1.2304658130360349;

// same for J_1^2
inline constexpr double bigjacobi_mass_1 = 1.2304658130360349;

}  // namespace refvals
