// Frozen high-precision reference values for the Fresnel-type
// boundary integrals and the quadrature oracle.  Generated by
// tools/make_fresnel_reference.py; do not edit by hand.
#pragma once
#include <complex>
#include <vector>

namespace rlab_test_reference {

struct RefPoint { double x; std::complex<double> value; };
struct OscRef   { const char* name; std::complex<double> value; };

inline const std::vector<RefPoint>& g1_reference() {
  static const std::vector<RefPoint> v = {
      {-10000, {1.25336071926694648e+00, 1.25333230656973504e+00}},
      {-3000, {1.25332687237475326e+00, 1.25348031672470483e+00}},
      {-1000, {1.25313914033022678e+00, 1.25284576133923231e+00}},
      {-300, {1.25274836618552521e+00, 1.25174643810779629e+00}},
      {-100, {1.25178630342135278e+00, 1.25807499052468397e+00}},
      {-75, {1.25997922919126393e+00, 1.25316924778432215e+00}},
      {-50, {1.24681134321058806e+00, 1.24571718734665415e+00}},
      {-30, {1.26994356309861645e+00, 1.25220078775799326e+00}},
      {-20, {1.23205766816206275e+00, 1.26647307483358307e+00}},
      {-15, {1.22228422711490370e+00, 1.24113923056717734e+00}},
      {-12, {1.23272963263260982e+00, 1.21708866740703003e+00}},
      {-10, {1.22778225347119441e+00, 1.21032796858737357e+00}},
      {-9, {1.21805815339987400e+00, 1.21038572980926373e+00}},
      {-8.0999999999999996, {1.27569388815309104e+00, 1.31083315550466528e+00}},
      {-8, {1.31061409616586411e+00, 1.22837871359300577e+00}},
      {-7.9000000000000004, {1.22694228439279618e+00, 1.19579013160487646e+00}},
      {-7.5, {1.23313660341289366e+00, 1.18978807225120997e+00}},
      {-7, {1.18499140051872165e+00, 1.23254400028557720e+00}},
      {-6, {1.17086109404493466e+00, 1.26511625797276039e+00}},
      {-5, {1.23812383505421275e+00, 1.15457434982307250e+00}},
      {-4, {1.22111739615557302e+00, 1.37379091330586478e+00}},
      {-3, {1.32952062638801882e+00, 1.40021959555151909e+00}},
      {-2.5, {1.23196490777261802e+00, 1.05717481242527822e+00}},
      {-2, {1.08811853109096646e+00, 1.43143355800150629e+00}},
      {-1.5, {1.52584192154522880e+00, 1.40489487296455873e+00}},
      {-1, {1.53118130655802220e+00, 9.36925370381131217e-01}},
      {-0.5, {1.12354109787254486e+00, 6.68138092926297555e-01}},
      {-0.29999999999999999, {9.26414159765718614e-01, 6.35651862856725924e-01}},
      {-0.10000000000000001, {7.26656068662379750e-01, 6.26990399610138693e-01}},
      {0, {6.26657068657750171e-01, 6.26657068657750171e-01}},
      {0.10000000000000001, {5.26658068653120481e-01, 6.26323737705361649e-01}},
      {0.29999999999999999, {3.26899977549781617e-01, 6.17662274458774307e-01}},
      {0.5, {1.29773039442955401e-01, 5.85176044389202676e-01}},
      {1, {-2.77867169242521972e-01, 3.16388766934369015e-01}},
      {1.5, {-2.72527784229728509e-01, -1.51580735649058468e-01}},
      {2, {1.65195606224533748e-01, -1.78119420686005975e-01}},
      {2.5, {2.13492295428821706e-02, 1.96139324890221983e-01}},
      {3, {-7.62064890725186045e-02, -1.46905458236018888e-01}},
      {4, {3.21967411599271419e-02, -1.20476775990364535e-01}},
      {5, {1.51903022612875135e-02, 9.87397874924277053e-02}},
      {6, {8.24530432705655458e-02, -1.18021206572602524e-02}},
      {7, {6.83227367967787075e-02, 2.07701370299230199e-02}},
      {7.5, {2.01775339026066050e-02, 6.35260650642902464e-02}},
      {7.9000000000000004, {2.63718529227041712e-02, 5.75240057106237990e-02}},
      {8, {-5.72999588503638052e-02, 2.49354237224945451e-02}},
      {8.0999999999999996, {-2.23797508375908304e-02, -5.75190181891651192e-02}},
      {9, {3.52559839156263294e-02, 4.29284075062365336e-02}},
      {10, {2.55318838443057763e-02, 4.29861687281267862e-02}},
      {12, {2.05845046828905115e-02, 3.62254699084701981e-02}},
      {15, {3.10299102005966235e-02, 1.21749067483230070e-02}},
      {20, {2.12564691534374781e-02, -1.31589375180827632e-02}},
      {30, {-1.66294257831161307e-02, 1.11334955750702906e-03}},
      {50, {6.50279410491221271e-03, 7.59694996884599863e-03}},
      {75, {-6.66509187576361066e-03, 1.44889531177999875e-04}},
      {100, {1.52783389414758381e-03, -4.76085320918360772e-03}},
      {300, {5.65771129975052708e-04, 1.56769920770403548e-03}},
      {1000, {1.74996985273547119e-04, 4.68375976267845578e-04}},
      {3000, {-1.27350592529869918e-05, -1.66179409204631195e-04}},
      {10000, {-4.65819514463325680e-05, -1.81692542348747687e-05}},
  };
  return v;
}

inline const std::vector<RefPoint>& g2_reference() {
  static const std::vector<RefPoint> v = {
      {-10000, {1.75691607724962791e-02, 2.40099937984353112e-02}},
      {-3000, {7.98570344171214801e-03, 4.02515291854882371e-02}},
      {-1000, {5.60771434898688567e-02, 3.57228756291070194e-03}},
      {-300, {1.03119194967195155e-01, 6.86326768841293358e-03}},
      {-100, {1.38631956000254981e-02, 1.82634055758792074e-01}},
      {-75, {2.49242404817748175e-01, 2.44815340580161495e-01}},
      {-50, {1.90967386104498982e-01, 5.46290033038997810e-04}},
      {-30, {4.00972020864608536e-01, 3.79562380645785069e-01}},
      {-20, {7.36827696616291355e-03, 2.15980954608351927e-01}},
      {-15, {1.94310611425658780e-01, 2.71032060763353178e-02}},
      {-12, {4.58119559589343917e-01, 1.36589491497230379e-02}},
      {-10, {4.94616304955212915e-01, 1.33151910463028683e-02}},
      {-9, {4.59194181461040629e-01, 3.12311479379675334e-03}},
      {-8.0999999999999996, {2.59896932926930335e-01, 8.43847948623772326e-01}},
      {-8, {8.53308321266605607e-01, 6.08667279139882722e-01}},
      {-7.9000000000000004, {6.01847896290590434e-01, 3.00049437214020449e-02}},
      {-7.5, {6.68788870270797697e-01, 5.39557472609376379e-02}},
      {-7, {2.51485281852721287e-01, 5.61926780051513475e-02}},
      {-6, {1.02237756021440640e-01, 2.03869822960186659e-01}},
      {-5, {8.93080395510766234e-01, 1.16805210442994523e-01}},
      {-4, {7.08397455220813044e-02, 9.36407279266029291e-01}},
      {-3, {4.66219725682279262e-01, 1.41723192073468596e+00}},
      {-2.5, {1.28882110399013250e+00, 2.20067489259250348e-01}},
      {-2, {-3.80886469496317867e-02, 8.88550176020276528e-01}},
      {-1.5, {1.10360882601035359e+00, 2.05203680593182014e+00}},
      {-1, {2.20239948082372017e+00, 1.42095775361620236e+00}},
      {-0.5, {2.15610002048480665e+00, 7.30893904581070619e-01}},
      {-0.29999999999999999, {1.98628854290227630e+00, 6.42638573908200117e-01}},
      {-0.10000000000000001, {1.78475612405959905e+00, 6.55762148914122323e-01}},
      {0, {1.67481339353817305e+00, 6.93730422047619033e-01}},
      {0.10000000000000001, {1.55786366210678939e+00, 7.48417714532794376e-01}},
      {0.29999999999999999, {1.29531639255912756e+00, 8.93062892702674915e-01}},
      {0.5, {9.78019948530568617e-01, 1.05402071160278332e+00}},
      {1, {-1.14183102235260736e-01, 1.17142792645200333e+00}},
      {1.5, {-9.85303379246778688e-01, 1.73959014455611405e-01}},
      {2, {2.64162612467334912e-02, -8.77700320914406973e-01}},
      {2.5, {5.91593269523725929e-01, 5.22517536473682376e-01}},
      {3, {-6.80641692836236989e-01, -2.40962981028425477e-01}},
      {4, {-3.02959014569898433e-01, -5.48045062046822129e-01}},
      {5, {4.47700646013049486e-01, 3.36952250715951362e-01}},
      {6, {3.10373270105041843e-01, -4.06684701623622691e-01}},
      {7, {4.19286147830888745e-01, -2.20371614923654008e-01}},
      {7.5, {4.05184667456553183e-01, 2.12697259477920453e-01}},
      {7.9000000000000004, {4.17219658288036865e-01, 1.57301060540245979e-01}},
      {8, {-1.64278497170292498e-01, 4.11514481564297541e-01}},
      {8.0999999999999996, {-4.02241368822102097e-01, -1.79193988556709594e-01}},
      {9, {4.15601949934021331e-01, 4.24025797214296202e-02}},
      {10, {3.83752372329995262e-01, 9.90346544501335135e-02}},
      {12, {3.48609144367486745e-01, 9.67935527660952894e-02}},
      {15, {2.96769460200476287e-01, -1.29022738347164795e-01}},
      {20, {6.43996121486782730e-02, -2.72749559531631824e-01}},
      {30, {-1.50691959077793869e-01, 1.72196941867847092e-01}},
      {50, {1.76712382640737964e-01, 1.37353002288894358e-02}},
      {75, {-1.00090266598489602e-01, 1.04526978852115870e-01}},
      {100, {-5.73002923203148953e-02, -1.11465867910542776e-01}},
      {300, {6.54970085158431276e-02, 3.07592202634617423e-02}},
      {1000, {3.60609928443799618e-02, 1.64438779450555607e-02}},
      {3000, {-1.73692478871798894e-02, -1.48965769031678356e-02}},
      {10000, {-1.14768524017806687e-02, 5.03601942284091601e-03}},
  };
  return v;
}

inline std::complex<double> c0_reference()      { return {1.25331413731550034e+00, 1.25331413731550034e+00}; }
inline std::complex<double> c_plus_reference()  { return {6.26657068657750171e-01, 6.26657068657750171e-01}; }
inline std::complex<double> c_minus_reference() { return {6.26657068657750171e-01, -6.26657068657750171e-01}; }

inline const std::vector<OscRef>& oracle_reference() {
  static const std::vector<OscRef> v = {
      {"parabola_shift_t50", {1.79999993167789557e-01, 1.74473527854327348e-01}},
      {"parabola_shift_t400", {6.27884582458116958e-02, 6.25436726517172165e-02}},
      {"linear_weighted_t50", {1.77199468005423300e-01, 1.77185625829196503e-01}},
      {"linear_weighted_t400", {6.26660005855984720e-02, 6.26660006751967036e-02}},
      {"square_shift_weighted_t50", {2.16972291978113713e-01, 4.39101629140335514e-01}},
      {"square_shift_weighted_t400", {5.60669635958004411e-03, -1.94276540432461425e-01}},
      {"interior_weighted_t50", {1.87078835983107816e-01, 1.70992204709094486e-01}},
      {"interior_weighted_t400", {6.29522818403220885e-02, 6.23845018061976314e-02}},
      {"quartic_t50", {1.12061882417794439e-01, 1.37456684587753314e-01}},
  };
  return v;
}

} // namespace rlab_test_reference
