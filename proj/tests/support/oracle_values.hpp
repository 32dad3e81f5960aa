#pragma once

// Reference values computed at 40 digits with mpmath.

namespace qaskey::oracle {

inline constexpr double kPochFinite_a03_q05_n5 = 5.19803388671875e-1;
inline constexpr double kPochFinite_cplx_q06_n7_re = -1.8002457306408688823e-1;
inline constexpr double kPochFinite_cplx_q06_n7_im = -9.0537536405448923604e-1;
inline constexpr double kPochInf_a03_q05 = 5.1011782663398757183e-1;
inline constexpr double kPochInf_cplx_q04_re = 2.5600614250651386585;
inline constexpr double kPochInf_cplx_q04_im = -5.9664850901904963098e-1;
inline constexpr double kPochInf_q09_q09 = 1.2860674342766176275e-6;
inline constexpr double kPochBilateral_a03_q05_km3 = 8.9285714285714285714;
inline constexpr double kTheta_z06_q03 = 1.2067676625106695753e-1;
inline constexpr double kQGamma_x05_q05 = 1.5720327257863238828;
inline constexpr double kQGamma_x25_q09 = 1.3039396133920590516;
inline constexpr double kQGamma_x05_q0999 = 1.7721214176718600226;
inline constexpr double kPhi21_nonterm = 4.2564580982308565679;
inline constexpr double kPhi10_nonterm = 4.7301415566644811908;
inline constexpr double kPhi32_term_n4 = 2.2040432447867430189e+2;
inline constexpr double kAW_n0 = 1.0;
inline constexpr double kDH_n0 = 1.0;
inline constexpr double kASC_n0 = 1.0;
inline constexpr double kBH_n0 = 1.0;
inline constexpr double kH_n0 = 1.0;
inline constexpr double kAW_n1 = -1.0958961538461538462;
inline constexpr double kDH_n1 = -4.4623076923076923077e-1;
inline constexpr double kASC_n1 = 3.0769230769230769231e-2;
inline constexpr double kBH_n1 = 3.3076923076923076923e-1;
inline constexpr double kH_n1 = 5.3076923076923076923e-1;
inline constexpr double kAW_n2 = 2.0364221715514053254;
inline constexpr double kDH_n2 = -1.0507421967455621302;
inline constexpr double kASC_n2 = -1.6121301775147928994;
inline constexpr double kBH_n2 = -1.4898224852071005917;
inline constexpr double kH_n2 = -1.2182840236686390533;
inline constexpr double kAW_n3 = -1.908687051734164676e+1;
inline constexpr double kDH_n3 = 1.1575785994017943503e+1;
inline constexpr double kASC_n3 = 3.996468479745106964;
inline constexpr double kBH_n3 = -6.6501228948566226673e-1;
inline constexpr double kH_n3 = -3.4331661356395084206;
inline constexpr double kAW_n4 = 3.2545172080424046542e+3;
inline constexpr double kDH_n4 = -2.0968601763243433316e+2;
inline constexpr double kASC_n4 = 3.3177227912406778474;
inline constexpr double kBH_n4 = 2.3513849189454150765e+1;
inline constexpr double kH_n4 = 1.5995184897237491684e+1;
inline constexpr double kAW_n5 = -6.2611855253035690521e+6;
inline constexpr double kDH_n5 = 1.3288782935869714075e+4;
inline constexpr double kASC_n5 = -3.577622672688097637e+2;
inline constexpr double kBH_n5 = -1.459094888773522528e+2;
inline constexpr double kH_n5 = 1.3916463802169715023e+2;
inline constexpr double kAW_cplx_n3_re = -4.0229096144866943359e+1;
inline constexpr double kAW_cplx_n3_im = 1.1590185566711425781e+2;
inline constexpr double kDH_cplx_n3_re = 2.1274299560546875e+1;
inline constexpr double kDH_cplx_n3_im = 1.846634765625e+1;
inline constexpr double kAW_big_n8 = 1.7423962627624120134e+34;
inline constexpr double kAW_c_n4 = 3.5275786448425297771e+2;
inline constexpr double kDiscAW_a15_n0 = 5.3461895507337273416;
inline constexpr double kDiscAW_a15_n1 = 1.6865566906113810824e+1;
inline constexpr double kDiscAW_a15_n2 = 5.5616251885966797307e+2;
inline constexpr double kDiscDH_a15_n0 = 4.8496057417175061874;
inline constexpr double kDiscDH_a15_n1 = 9.5395066919516423197;
inline constexpr double kDiscDH_a15_n2 = 9.436543367965190824e+1;
inline constexpr double kDiscASC_a15_n0 = 5.1273002428667874912;
inline constexpr double kDiscASC_a15_n1 = 8.1524073861581921109;
inline constexpr double kDiscASC_a15_n2 = 4.922015959393008487e+1;
inline constexpr double kDiscBH_a15_n0 = 5.6981181974963644502;
inline constexpr double kDiscBH_a15_n1 = 8.5471772962445466753;
inline constexpr double kDiscBH_a15_n2 = 4.4872680805283870045e+1;
inline constexpr double kDiscH_a15_n0 = 6.3059466774132076518;
inline constexpr double kDiscH_a15_n1 = 9.4589200161198114778;
inline constexpr double kDiscH_a15_n2 = 4.9659330084629010258e+1;
inline constexpr double kMassAW_a13 = 4.9567258940786288993;
inline constexpr double kContH_q05_n2 = 9.8497953639393714563;
inline constexpr double kContASC_q05_n2 = 1.2409450851764736807e+1;
inline constexpr double kContAW_q05_n1 = 7.9818076740677262903;
inline constexpr double kQBeta_a15 = 1.2374935192120819247e+1;
inline constexpr double kJ_a2_q03 = 1.9256451575203629878e+1;
inline constexpr double kK00_a15_q04 = 6.3059466815832787173;
inline constexpr double kBetaClosed_1234 = -9.9773237773861464072e-2;
inline constexpr double kFourier_a1_t1 = 1.5403023058681397174;
inline constexpr double kT_q09 = 6.7768417201696481721e-2;

}  // namespace qaskey::oracle
