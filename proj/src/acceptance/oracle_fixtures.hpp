// Generated by tests/oracle/gen_fixtures.py (mpmath, 40 digits). Do not edit.
#pragma once

#include <complex>

#include "lerchsum/identities.hpp"

namespace lerchsum::fixtures {

struct LerchFixture {
  const char* label;
  std::complex<double> z, s, v, value;
};

struct TheoremFixture {
  std::complex<double> k, a, m;
  int n, q;
  std::complex<double> lhs, rhs;
};

struct ProductFixture {
  ProductCase id;
  int n, q;
  std::complex<double> x, m, r, lhs, rhs;
  bool pass;
};

inline constexpr double kCatalan = 0.915965594177219;
inline constexpr double kTanAnomalyLhs = -0.3449534516635999;  // tan(0.7) + tan(0.7 + pi/2)
inline constexpr double kTanAnomalyRhs = 11.595767430965779;  // 2 tan(1.4)
inline constexpr double kTanSumN3M04 = 7.716454866378957;  // 3 tan(1.2)

struct GammaFixture {
  std::complex<double> s, gamma;
};

inline constexpr GammaFixture kGammaFixtures[] = {
    {{0.5, 0.0}, {1.772453850905516, 0.0}},
    {{1.0, 1.0}, {0.49801566811835607, -0.15494982830181067}},
    {{3.5, 2.0}, {-1.2371865633661037, 1.2899550031953229}},
    {{-2.5, 0.5}, {-0.33387520352243233, -0.20645730796360842}},
    {{10.0, -3.0}, {197624.13894976547, -113252.91895947162}},
    {{0.1, -7.0}, {1.847258471388663e-05, 5.625609535565905e-06}},
    {{-7.3, 0.2}, {0.00022606131515147553, 0.00023065434516651964}},
    {{25.0, 15.0}, {1.0752337616753605e+21, -8.01273285512639e+21}},
    {{0.001, 0.0}, {999.4237724845955, 0.0}},
    {{-0.999, 0.01}, {-10.32513590314583, 98.99577394293742}},
    {{0.5, 20.0}, {-3.430784159145482e-14, 4.5428803574633436e-14}},
    {{-4.5, -12.0}, {-5.101880905401633e-14, -2.5939176177771226e-14}},
    {{7.25, 0.0}, {1155.3810139199898, 0.0}},
    {{-0.5, 0.0}, {-3.544907701811032, 0.0}},
};

inline constexpr LerchFixture kLerchFixtures[] = {
    {"phi_half_1_1", {0.5, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.3862943611198906, 0.0}},
    {"zeta_2", {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}, {1.6449340668482264, 0.0}},
    {"zeta_4", {1.0, 0.0}, {4.0, 0.0}, {1.0, 0.0}, {1.0823232337111381, 0.0}},
    {"zeta_2_shift", {1.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}, {0.6449340668482264, 0.0}},
    {"alt_s2_v1p5", {-1.0, 0.0}, {2.0, 0.0}, {1.5, 0.0}, {0.33613762329112395, 0.0}},
    {"negative_s_complex_v", {0.3, 0.2}, {-1.5, 0.0}, {0.7, -0.4}, {1.4221240993251527, 0.6333307229309149}},
    {"unit_circle_negative_v", {0.5, -0.8660254037844386}, {2.0, 0.0}, {-0.5, 0.0}, {5.62782191997907, -3.7602659963148377}},
    {"near_circle_complex", {0.8289548946025966, 0.35047650807778546}, {1.2, -0.3}, {2.0, 1.0}, {0.46091234883897975, 0.22472519794247747}},
    {"imag_z_negative_v", {0.0, 0.4}, {1.0, 1.0}, {-0.5, 0.0}, {-36.22653049524677, -28.93620041272361}},
    {"z_zero", {0.0, 0.0}, {2.5, 1.0}, {3.0, 0.0}, {0.02917751352834587, -0.05713054386010826}},
    {"li2_half_over_z", {0.5, 0.0}, {2.0, 0.0}, {1.0, 0.0}, {1.164481052930025, 0.0}},
    {"oscillatory_s", {0.8, 0.0}, {0.5, 2.0}, {0.6, 0.3}, {2.1022151663501982, 0.6378530070614479}},
    {"circle_small_s", {-0.4161468365471424, 0.9092974268256817}, {0.3, 0.0}, {0.25, 0.0}, {1.0344452821341115, 0.36683267027684685}},
    {"high_z_negative_s", {0.95, 0.0}, {-2.0, 0.0}, {1.5, 0.0}, {16004.999999999958, 0.0}},
    {"hurwitz_complex_s", {1.0, 0.0}, {1.5, 3.0}, {0.3, 0.0}, {-5.21584703400803, -3.206376876296449}},
    {"circle_minus_large_v", {-0.99, 0.0}, {3.0, 0.0}, {10.0, 0.0}, {0.0005762379553270092, 0.0}},
};

inline constexpr TheoremFixture kTheoremFixtures[] = {
    {{1.0, 0.0}, {2.718281828459045, 0.0}, {0.3, 0.6}, 3, 1, {4.013106881651467, 0.01239679145836835}, {4.013106881651467, 0.01239679145836835}},
    {{-1.0, 0.0}, {2.718281828459045, 0.0}, {0.5, 1.0}, 5, 2, {5.000041828378176, 1.706197593850051e-05}, {5.000041828378176, 1.706197593850051e-05}},
    {{0.5, 0.25}, {2.0, 1.0}, {-0.2, 1.1}, 7, 3, {5.745851248085393, 1.4235989391650918}, {5.745851248085393, 1.4235989391650918}},
    {{2.0, 0.0}, {0.0, 1.0}, {0.3, 0.5}, 5, 2, {-21.47335563277481, 1.3333430213216249}, {-21.47335563277481, 1.3333430213216249}},
};

inline constexpr ProductFixture kProductFixtures[] = {
    {ProductCase::ex2, 3, 1, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0175976560461713, 0.0}, {1.0175976560461713, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.25, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.1407535563700462, 0.0}, {1.1407535563700462, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {6.395751768219683, 0.0}, {6.395751768219683, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.9, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.019063074604769914, 0.0}, {-0.019063074604769914, 0.0}, true},
    {ProductCase::ex2, 3, 1, {1.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.22190126475408195, 0.0}, {0.22190126475408195, 0.0}, true},
    {ProductCase::ex2, 3, 1, {-0.7, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.3258733590106346, 0.0}, {-0.3258733590106346, 0.0}, true},
    {ProductCase::ex2, 3, 1, {2.2, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-161.87224307499642, 0.0}, {-161.87224307499642, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.3, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {0.7559330215284542, -0.038029340366123085}, {0.7559330215284542, -0.038029340366123085}, true},
    {ProductCase::ex2, 3, 1, {0.2, 0.3}, {0.0, 0.0}, {0.0, 0.0}, {0.8773643405908413, 0.11755033164775844}, {0.8773643405908413, 0.11755033164775844}, true},
    {ProductCase::ex2, 3, 1, {-0.4, 0.5}, {0.0, 0.0}, {0.0, 0.0}, {0.6823303956987974, -0.10743157438492106}, {0.6823303956987974, -0.10743157438492106}, true},
    {ProductCase::ex2, 3, 1, {1.1, -0.6}, {0.0, 0.0}, {0.0, 0.0}, {0.3249539640924733, 0.40523908349805965}, {0.3249539640924733, 0.40523908349805965}, true},
    {ProductCase::ex2, 3, 1, {0.0, 0.05}, {0.0, 0.0}, {0.0, 0.0}, {0.9958243595779883, -7.340186449260096e-43}, {0.9958243595779883, 0.0}, true},
    {ProductCase::ex2, 3, 1, {0.7, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {0.12615614667761527, 0.2905009594337246}, {0.12615614667761527, 0.2905009594337246}, true},
    {ProductCase::ex2, 3, 1, {-1.2, -0.9}, {0.0, 0.0}, {0.0, 0.0}, {0.7091695130549283, -0.5091412637757191}, {0.7091695130549283, -0.5091412637757191}, true},
    {ProductCase::ex2, 3, 1, {2.5, 0.1}, {0.0, 0.0}, {0.0, 0.0}, {-13.116453020926471, 1.4565773679962797}, {-13.116453020926471, 1.4565773679962797}, true},
    {ProductCase::ex2, 3, 1, {0.6, -1.4}, {0.0, 0.0}, {0.0, 0.0}, {0.8408646337835466, 0.113141196213786}, {0.8408646337835466, 0.113141196213786}, true},
    {ProductCase::ex2, 3, 1, {1.9, 0.8}, {0.0, 0.0}, {0.0, 0.0}, {2.255497419745636, -0.8848926204468995}, {2.255497419745636, -0.8848926204468995}, true},
    {ProductCase::ex2, 3, 1, {-0.15, 2.0}, {0.0, 0.0}, {0.0, 0.0}, {0.915422454338085, 0.016446477933018164}, {0.915422454338085, 0.016446477933018164}, true},
    {ProductCase::ex2, 3, 1, {3.0, -0.3}, {0.0, 0.0}, {0.0, 0.0}, {-0.11735227242943723, -0.18342151567421167}, {-0.11735227242943723, -0.18342151567421167}, true},
    {ProductCase::ex2, 5, 1, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0528565006249408, 0.0}, {1.0528565006249408, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.25, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.867965841753934, 0.0}, {1.867965841753934, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.059504763122933894, 0.0}, {-0.059504763122933894, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.9, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {6.325093309655906, 0.0}, {6.325093309655906, 0.0}, true},
    {ProductCase::ex2, 5, 1, {1.337, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-101.64870821915284, 0.0}, {-101.64870821915284, 0.0}, true},
    {ProductCase::ex2, 5, 1, {-0.7, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.014718389368255296, 0.0}, {0.014718389368255296, 0.0}, true},
    {ProductCase::ex2, 5, 1, {2.237, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {2.747014203905949, 0.0}, {2.747014203905949, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.3, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {0.8855588529562308, -0.07573940311219089}, {0.8855588529562308, -0.07573940311219089}, true},
    {ProductCase::ex2, 5, 1, {0.2, 0.3}, {0.0, 0.0}, {0.0, 0.0}, {0.7224633626763217, 0.0976497919548356}, {0.7224633626763217, 0.0976497919548356}, true},
    {ProductCase::ex2, 5, 1, {-0.4, 0.5}, {0.0, 0.0}, {0.0, 0.0}, {0.6460590209176487, 0.11431144025853776}, {0.6460590209176487, 0.11431144025853776}, true},
    {ProductCase::ex2, 5, 1, {1.1, -0.6}, {0.0, 0.0}, {0.0, 0.0}, {1.659345416943421, 0.5370783398172694}, {1.659345416943421, 0.5370783398172694}, true},
    {ProductCase::ex2, 5, 1, {0.0, 0.05}, {0.0, 0.0}, {0.0, 0.0}, {0.9886085839832135, 5.159582230879032e-42}, {0.9886085839832135, 0.0}, true},
    {ProductCase::ex2, 5, 1, {0.7, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {-0.06298589765482636, -0.22555491985324663}, {-0.06298589765482636, -0.22555491985324663}, true},
    {ProductCase::ex2, 5, 1, {-1.2, -0.9}, {0.0, 0.0}, {0.0, 0.0}, {1.2852660571426835, -0.05447392196012959}, {1.2852660571426835, -0.05447392196012959}, true},
    {ProductCase::ex2, 5, 1, {2.5, 0.1}, {0.0, 0.0}, {0.0, 0.0}, {0.9583775910319838, -0.010007747854809255}, {0.9583775910319838, -0.010007747854809255}, true},
    {ProductCase::ex2, 5, 1, {0.6, -1.4}, {0.0, 0.0}, {0.0, 0.0}, {0.9903819164952192, 0.0592064182422697}, {0.9903819164952192, 0.0592064182422697}, true},
    {ProductCase::ex2, 5, 1, {1.9, 0.8}, {0.0, 0.0}, {0.0, 0.0}, {0.8880040991737507, 0.2393179267730924}, {0.8880040991737507, 0.2393179267730924}, true},
    {ProductCase::ex2, 5, 1, {-0.15, 2.0}, {0.0, 0.0}, {0.0, 0.0}, {0.987658573105988, 0.0047528991167185425}, {0.987658573105988, 0.0047528991167185425}, true},
    {ProductCase::ex2, 5, 1, {3.0, -0.3}, {0.0, 0.0}, {0.0, 0.0}, {0.37815949414168987, 0.0609883890118067}, {0.37815949414168987, 0.0609883890118067}, true},
    {ProductCase::ex3, 3, 1, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex3, 3, 1, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {6.51997603600125, 1.431567314016492}, {6.51997603600125, 1.431567314016492}, true},
    {ProductCase::ex3, 3, 1, {0.2, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {54.47071159054917, 71.39560239379384}, {54.47071159054917, 71.39560239379384}, true},
    {ProductCase::ex3, 3, 1, {0.45, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.4731168301616215e+18, 1.1047654973182163e+19}, {-1.4731168301616215e+18, 1.1047654973182163e+19}, true},
    {ProductCase::ex3, 3, 1, {-0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-6.126030699237097e-05, 6.476218455430204e-05}, {-6.126030699237097e-05, 6.476218455430204e-05}, true},
    {ProductCase::ex3, 3, 1, {0.8, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-4.356055053769924e-28, 1.7185178832734744e-27}, {-4.356055053769924e-28, 1.7185178832734744e-27}, true},
    {ProductCase::ex3, 3, 1, {1.1239999999999999, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.189906428492455e+46, -1.3753358900631083e+46}, {1.189906428492455e+46, -1.3753358900631083e+46}, true},
    {ProductCase::ex3, 3, 1, {2.4, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-3.4436091618946405e-05, 2.921196106295325e-05}, {-3.4436091618946405e-05, 2.921196106295325e-05}, true},
    {ProductCase::ex3, 3, 1, {0.3, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.011834877413911447, -0.017145138617995666}, {-0.011834877413911447, -0.017145138617995666}, true},
    {ProductCase::ex3, 3, 1, {0.2, 0.3}, {0.0, 0.0}, {0.0, 0.0}, {-0.15706295248306157, -0.0367927259071991}, {-0.15706295248306157, -0.0367927259071991}, true},
    {ProductCase::ex3, 3, 1, {-0.4, 0.5}, {0.0, 0.0}, {0.0, 0.0}, {2727.896876930265, -1173.0246652271287}, {2727.896876930265, -1173.0246652271287}, true},
    {ProductCase::ex3, 3, 1, {1.1, -0.6}, {0.0, 0.0}, {0.0, 0.0}, {-7284.949379605912, -73236.56741787966}, {-7284.949379605912, -73236.56741787966}, true},
    {ProductCase::ex3, 3, 1, {0.0, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {-0.5544124935090048, 0.8322420243181233}, {-0.5544124935090048, 0.8322420243181233}, true},
    {ProductCase::ex3, 3, 1, {0.7, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {4.456890811767695e-16, 1.945319787604065e-16}, {4.456890811767695e-16, 1.945319787604065e-16}, true},
    {ProductCase::ex3, 3, 1, {-1.2, -0.9}, {0.0, 0.0}, {0.0, 0.0}, {3.2537466890328858e-06, -5.346825379214792e-06}, {3.2537466890328858e-06, -5.346825379214792e-06}, true},
    {ProductCase::ex3, 3, 1, {2.5, 0.1}, {0.0, 0.0}, {0.0, 0.0}, {2.1259231199524216e-06, 4.086664465422169e-07}, {297034212830.5821, 57098920990.9224}, false},
    {ProductCase::ex3, 3, 1, {0.6, -1.4}, {0.0, 0.0}, {0.0, 0.0}, {184.29479220679343, -119.6362744932537}, {184.29479220679343, -119.6362744932537}, true},
    {ProductCase::ex3, 3, 1, {1.9, 0.8}, {0.0, 0.0}, {0.0, 0.0}, {3.317723387989494e-08, 3.75304262519048e-08}, {3.317723387989494e-08, 3.75304262519048e-08}, true},
    {ProductCase::ex3, 3, 1, {-0.15, 0.7}, {0.0, 0.0}, {0.0, 0.0}, {-8.828196524475148, 6.596570342078081}, {-8.828196524475148, 6.596570342078081}, true},
    {ProductCase::ex3, 3, 1, {0.05, -0.05}, {0.0, 0.0}, {0.0, 0.0}, {1.6084929403787194, -2.130616047530361}, {1.6084929403787194, -2.130616047530361}, true},
    {ProductCase::ex3, 5, 1, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex3, 5, 1, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {273.63540544480395, 196.2011044978978}, {273.63540544480395, 196.2011044978978}, true},
    {ProductCase::ex3, 5, 1, {0.2, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-603153226.7993197, 56853300.602396175}, {-603153226.7993197, 56853300.602396175}, true},
    {ProductCase::ex3, 5, 1, {0.45, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-2.2179184819137603e-38, -2.1820050408802571e-38}, {-2.2179184819137603e-38, -2.1820050408802571e-38}, true},
    {ProductCase::ex3, 5, 1, {-0.263, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.9804943159404828e-27, 2.409563874189103e-27}, {1.9804943159404828e-27, 2.409563874189103e-27}, true},
    {ProductCase::ex3, 5, 1, {0.8, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0357588580184297e+29, -3.2560628603214297e+28}, {-1.0357588580184297e+29, -3.2560628603214297e+28}, true},
    {ProductCase::ex3, 5, 1, {1.05, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-6.092777643009971e-19, -1.1398594879067203e-19}, {-6.092777643009971e-19, -1.1398594879067203e-19}, true},
    {ProductCase::ex3, 5, 1, {2.4, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {4.9807383286879355e-21, 5.246261541159605e-21}, {0.0006959093087101101, 0.0007330082412465486}, false},
    {ProductCase::ex3, 5, 1, {0.3, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.006583321084372794, -0.0001717068702234489}, {-0.006583321084372794, -0.0001717068702234489}, true},
    {ProductCase::ex3, 5, 1, {0.2, 0.3}, {0.0, 0.0}, {0.0, 0.0}, {-0.0002509234725017381, 0.0003094543214745488}, {-0.0002509234725017381, 0.0003094543214745488}, true},
    {ProductCase::ex3, 5, 1, {-0.4, 0.5}, {0.0, 0.0}, {0.0, 0.0}, {-24404.751785259683, -10486.283908773377}, {-24404.751785259683, -10486.283908773377}, true},
    {ProductCase::ex3, 5, 1, {1.1, -0.6}, {0.0, 0.0}, {0.0, 0.0}, {-33024414.076254167, 81441268.71589349}, {-33024414.076254167, 81441268.71589349}, true},
    {ProductCase::ex3, 5, 1, {0.0, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {-0.6393653933083505, -0.7689030457994417}, {-0.6393653933083505, -0.7689030457994417}, true},
    {ProductCase::ex3, 5, 1, {0.7, 0.2}, {0.0, 0.0}, {0.0, 0.0}, {-137.60143145702173, 119.73959326255675}, {-137.60143145702173, 119.73959326255675}, true},
    {ProductCase::ex3, 5, 1, {-1.2, -0.9}, {0.0, 0.0}, {0.0, 0.0}, {-2.0334070313364092e-09, -5.5305725731426866e-09}, {-2.0334070313364092e-09, -5.5305725731426866e-09}, true},
    {ProductCase::ex3, 5, 1, {2.5, 0.1}, {0.0, 0.0}, {0.0, 0.0}, {-4.223529761253411e-18, -3.3921052673159564e-18}, {-0.5901120441403921, -0.47394532213291707}, false},
    {ProductCase::ex3, 5, 1, {0.6, -1.4}, {0.0, 0.0}, {0.0, 0.0}, {-12332.060347421611, -376.17589846213804}, {-12332.060347421611, -376.17589846213804}, true},
    {ProductCase::ex3, 5, 1, {1.9, 0.8}, {0.0, 0.0}, {0.0, 0.0}, {7.495673726438152e-14, -8.979509988706068e-14}, {10472.963599065903, -12546.181261528163}, false},
    {ProductCase::ex3, 5, 1, {-0.15, 0.7}, {0.0, 0.0}, {0.0, 0.0}, {-21.456064432868878, 13.292900456339916}, {-21.456064432868878, 13.292900456339916}, true},
    {ProductCase::ex3, 5, 1, {0.05, -0.05}, {0.0, 0.0}, {0.0, 0.0}, {-12.080089812915187, -6.018616472726795}, {-12.080089812915187, -6.018616472726795}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.4, 0.0}, {0.4, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.3, 0.2}, {0.3, 0.2}, {1.0, 3.754246630811488e-42}, {1.0, -5.002668131490825e-42}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {-0.7, 1.1}, {-0.7, 1.1}, {1.0, -6.350242594479625e-42}, {1.0, 1.6676430353176142e-42}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {3.3415926535897933, 0.0}, {0.2, 0.0}, {-0.9999999999999999, 0.0}, {-0.9999999999999999, -8.813754755807632e-17}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {3.241592653589793, 0.5}, {0.1, 0.5}, {-1.0, -1.081465925023944e-16}, {-1.0, -2.975068636669725e-17}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {-3.4415926535897934, -0.4}, {-0.3, -0.4}, {-0.9999999999999999, 4.771879481492296e-16}, {-0.9999999999999999, 7.873701006323373e-16}, true},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.4, 1.2}, {0.1, 0.9}, {1.5184828235093188, -1.9215511583442495}, {1.2832573557620486, -0.3998228377985797}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.4, 0.0}, {0.1, 0.0}, {0.37929855982820243, 0.0}, {0.3130486101101648, 0.214168076976571}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}, {-1.5926264814488593, 0.0}, {-0.27069417275912616, -1.5694533361162497}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {-0.5, 0.0}, {0.6, 0.0}, {-0.31134044676505884, 0.0}, {0.1832242007680156, 0.25171763157313465}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.2, 0.7}, {0.2, 0.0}, {4.1443131704103155, -2.751500235187035}, {1.0219750454463974, -0.6785116042817391}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.9, 0.0}, {0.1, -0.8}, {-0.15586664008632475, 0.04742808185147966}, {-0.008652603810409576, -0.03173511555963352}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {1.3, -0.2}, {-0.4, 0.6}, {-0.24690745229207875, 0.21243561912548858}, {1.4512172559569203, -0.7047539579480645}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.0, 1.5}, {0.0, 0.5}, {19.13532399155553, 4.4365745054563195e-42}, {2.589684492221518, 0.0}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {2.0, 0.0}, {-0.2, 0.0}, {1.163369506058991, 0.0}, {-0.3575416891424862, -1.1070648346655576}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.6, 0.6}, {0.6, -0.6}, {-0.8855144963548848, 0.46461174839359654}, {-0.08033206271742009, 0.042148626888482574}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {-1.1, 0.3}, {0.8, 0.3}, {1.0064117608249477, -0.5071132902704732}, {-0.48575793944955303, 1.0168912162849284}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.05, 0.0}, {0.0, 0.0}, {0.9887710779360422, 0.0}, {0.9838313410528056, 0.0987123949919223}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.25, 2.0}, {0.15, 2.0}, {0.9553336445130456, -0.2955179492934647}, {0.9950009288985634, -0.09983176941329384}, false},
    {ProductCase::ex4, 3, 1, {0.0, 0.0}, {0.5, -1.0}, {0.5, 0.0}, {10.067661995777765, 141.26626132964944}, {74.39051927187403, 1043.8243298509772}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.4, 0.0}, {0.4, 0.0}, {1.0, 0.0}, {1.0, 0.0}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.3, 0.2}, {0.3, 0.2}, {1.0, 1.8018721197057946e-43}, {1.0, -1.0271316503984071e-42}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {-0.7, 1.1}, {-0.7, 1.1}, {1.0, -6.938374694754403e-42}, {1.0, -4.1023195111256225e-43}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {1.7707963267948967, 0.0}, {0.2, 0.0}, {-1.557407724654903, 0.0}, {-1.557407724654903, -6.559870717913717e-16}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {1.6707963267948966, 0.5}, {0.1, 0.5}, {-0.011257099146252059, -0.9926817603046373}, {-0.011257099146251972, -0.9926817603046373}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {-1.8707963267948966, -0.4}, {-0.3, -0.4}, {-0.005362060922003031, -1.036920282100185}, {-0.005362060922003008, -1.036920282100185}, true},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.4, 1.2}, {0.1, 0.9}, {0.3165147688133064, -4.470180702703539}, {1.2894349255668487, -0.39902224426023764}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.4, 0.0}, {0.1, 0.0}, {-0.4741967931207906, 0.0}, {-0.17182888513528938, -0.44196994562889164}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {1.037, 0.0}, {0.33699999999999997, 0.0}, {-3.9946496736052377, 0.0}, {3.763848165615618, -1.3381603046819086}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {-0.5, 0.0}, {0.6, 0.0}, {0.8092421087008199, 0.0}, {-0.24870669977441132, 0.7700764689184253}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.2, 0.7}, {0.2, 0.0}, {16.57282467105731, -25.763615523849715}, {1.0077945061237528, -1.5666870734573393}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.9, 0.0}, {0.1, -0.8}, {-0.006776262436445371, 0.0036994061829194037}, {0.00028454696685378084, -0.00013441497163516427}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {1.3, -0.2}, {-0.4, 0.6}, {-0.039894896385791766, -0.14708258331566607}, {0.9320140137863173, -3.6206538251378335}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.0, 1.5}, {0.0, 0.5}, {147.4198970495757, 7.226787158071809e-40}, {2.700089599374398, 0.0}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {2.0, 0.0}, {-0.2, 0.0}, {-1.5529667742732662, 0.0}, {1.2596005016829102, -0.9083569662620937}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.6, 0.6}, {0.6, -0.6}, {0.9605554979985629, 0.27808835873645055}, {0.007905128775073638, 0.0022885968496781277}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {-1.1, 0.3}, {0.8, 0.3}, {-1.0046656219407255, -0.07587605688425145}, {-0.32587405411107695, 0.9533710131816772}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.05, 0.0}, {0.0, 0.0}, {0.9689124217106447, 0.0}, {0.9495986813738215, 0.19249318242027594}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.25, 2.0}, {0.15, 2.0}, {0.877582559918984, -0.4794255384644023}, {0.9950041634078156, -0.09983341728575805}, false},
    {ProductCase::ex4, 5, 1, {0.0, 0.0}, {0.5, -1.0}, {0.5, 0.0}, {74.20994852478785, -55.43145282830381}, {4051.725903508278, -3026.4547780748894}, false},
};

}  // namespace lerchsum::fixtures
