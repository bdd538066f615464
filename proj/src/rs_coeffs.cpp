#include "critline/rs_formula.hpp"

namespace critline::rs_detail {

// Chebyshev coefficients (in x = 2p - 1) of the correction terms
// C_0..C_5(p) of the Riemann-Siegel expansion, fitted once against a
// high-precision reference evaluation of Z.  Coefficients below 1e-17
// are dropped.
const double kC0[] = {
    0.6426672862397687,
    2.7320946859989177e-17,
    0.27197299999785535,
    -3.5300619581853844e-17,
    0.010738605819340311,
    4.4704987284773027e-17,
    -0.0013743815296337416,
    1.015735312082985e-16,
    -0.00012468221880332947,
    1.880649482060003e-17,
    -5.764599707061686e-07,
    2.036233909996236e-17,
    2.7280674309318544e-07,
    4.8499015721274185e-17,
    8.077953214237957e-09,
    -2.553476383352487e-17,
    -2.088459312129056e-10,
    -7.306664695307846e-18,
    -1.3115558555409532e-11,
    7.196306607130104e-18,
    -1.425780692459595e-14,
    4.356404428765971e-17,
    1.0160604700893804e-14,
    5.478695197412615e-17,
    1.0338716135721398e-16,
    -7.334274671613363e-17,
    2.3212151640683215e-17,
    -4.6118919354437467e-17,
    1.3003780364369402e-17,
    -7.082342261796061e-17,
    2.051778683820503e-17,
    -5.663121695773986e-18,
    1.0881934736156174e-16,
    -2.5472259342701684e-17,
    1.3033152183880537e-17,
    -2.668282083743977e-18,
    -1.0834500831713593e-17,
    -8.404913066397116e-18,
    1.8555369568096002e-16,
    -7.721835813244353e-17,
    2.256058759852841e-16,
};
const double kC1[] = {
    2.0030861316495757e-18,
    0.010697913921003,
    -4.404105650172415e-18,
    0.01717065124337788,
    2.3549003808839013e-18,
    0.0027932111497884615,
    1.6336061031221694e-18,
    -3.637565371929439e-05,
    -7.487495919898659e-18,
    -2.7108955231162594e-05,
    -1.936153406085722e-19,
    -1.048374986685758e-06,
    1.685141138945264e-18,
    5.886467166392771e-08,
    1.135407444694477e-17,
    4.3229672673093e-09,
    9.812851046903659e-18,
    -1.1369595250316658e-11,
    3.79316895219564e-18,
    -6.6998364260184744e-12,
    4.0504602286388846e-18,
    -1.0080594207257096e-13,
    -8.697101854272217e-18,
    5.1519605549697915e-15,
    -1.3348791997142256e-17,
    1.4981601588376081e-16,
};
const double kC2[] = {
    0.003146115853988785,
    -2.935303910663162e-17,
    -0.002308783884530626,
    6.17822963168826e-18,
    5.7698207666905674e-05,
    -1.8040240484933576e-18,
    0.0003523886202366618,
    8.559068606239259e-19,
    2.524666745868324e-05,
    6.028886531218822e-19,
    -3.4428211971906045e-06,
    1.33002397293185e-18,
    -3.5350745566268303e-07,
    5.774022674450962e-19,
    3.730830182849945e-09,
    1.2342603337257289e-18,
    1.2776951858785529e-09,
    1.1276722876921462e-18,
    2.187461697074491e-11,
    1.075348547038047e-18,
    -1.9141399282091935e-12,
    8.121447136012469e-19,
    -6.562692833600989e-14,
    5.001784963085468e-19,
    1.2595890203129208e-15,
    1.5552410183196812e-18,
    8.1953769916994e-17,
};
const double kC3[] = {
    2.2262275793487447e-14,
    7.123256221722511e-05,
    -2.1850602943993086e-14,
    0.00023234305298077543,
    -1.112162868876505e-15,
    -0.00012929912045428853,
    -1.6223650381700657e-16,
    1.8074496413541993e-05,
    5.784282623858824e-16,
    6.526185187244397e-06,
    -2.5903078952630485e-16,
    -1.1696365378689275e-07,
    5.768948254109827e-17,
    -7.349476126573657e-08,
    -4.3613128934655996e-18,
    -1.7750910076584937e-09,
    -6.94458488344054e-19,
    2.5555529610073847e-10,
    1.9355527654623735e-19,
    1.1376636578127691e-11,
    -1.9012764317453094e-20,
    -3.3498646076327245e-13,
    -7.710712276821983e-20,
    -2.5537441385855043e-14,
    -1.0662359810440903e-19,
    6.761674504121995e-17,
    -2.5971965684064396e-20,
    2.9790887570572575e-17,
};
const double kC4[] = {
    0.00016765745012668388,
    -5.308858066487181e-13,
    -0.00022728768714129222,
    9.493209185727158e-14,
    6.477387200138822e-05,
    -4.375381637237171e-14,
    -8.492200483188e-06,
    1.296097479989429e-14,
    -2.6161407852362865e-06,
    -2.5211694547921442e-15,
    8.336765240711439e-07,
    2.2052399385265033e-16,
    6.324703431961944e-08,
    4.411884244238033e-17,
    -1.0059948934702861e-08,
    -1.6271327459677842e-17,
    -7.822676377826746e-10,
    1.475048646701536e-18,
    3.167656561694408e-11,
    2.1595122377372268e-19,
    3.5006942806885624e-12,
    3.047413490032916e-20,
    -1.4314499793509333e-14,
    5.754044576085346e-20,
    -7.269322362387802e-15,
    1.383242447224235e-19,
    -8.777465317862272e-17,
};
const double kC5[] = {
    1.5261923221039252e-10,
    8.828848528459542e-05,
    -1.4924369542448972e-10,
    -1.5628691213084413e-05,
    -7.625266741403055e-12,
    -1.83421821220571e-07,
    -1.097809781285978e-12,
    2.109726001531033e-06,
    3.953048162155403e-12,
    -6.657014570339167e-07,
    -1.7712473039279172e-12,
    2.771472393613799e-08,
    3.944219532214252e-13,
    1.811124767001298e-08,
    -3.05148267639909e-14,
    -5.765881781851426e-10,
    -5.386622323366269e-15,
    -1.8675043127023564e-10,
    1.1249198067621989e-15,
    -1.1052132119870081e-13,
    1.8232670215698033e-17,
    7.870657141814616e-13,
    -1.087813616417903e-17,
    1.445833780899695e-14,
    -1.2686707949519974e-19,
    -1.5814505885490026e-15,
    4.5638686708506784e-20,
    -4.9080749709533336e-17,
};

const double* kCheb[6] = {kC0, kC1, kC2, kC3, kC4, kC5};
const int kChebLen[6] = {41, 26, 27, 28, 27, 28};

} // namespace critline::rs_detail
