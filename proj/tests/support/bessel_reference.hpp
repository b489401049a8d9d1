#pragma once

#include <array>

// High-precision reference values for the Bessel implementations:
// rows of (w, J0(w), J1(w), J2(w)), computed independently with 40-digit
// arithmetic and rounded to double.
inline constexpr std::array<std::array<double, 4>, 38> kBesselRef = {{
    {9.99999999999999955e-07, 9.99999999999749978e-01, 4.99999999999937509e-07, 1.24999999999989572e-13},
    {2.09310199999999997e-06, 9.99999999998904765e-01, 1.04655099999942676e-06, 5.47634497800300097e-13},
    {4.38107599999999962e-06, 9.99999999995201505e-01, 2.19053799999474440e-06, 2.39922836471816189e-12},
    {9.17003999999999970e-06, 9.99999999978977594e-01, 4.58501999995180537e-06, 1.05112042001263420e-11},
    {1.91938310000000006e-05, 9.99999999907899229e-01, 9.59691549955805916e-06, 4.60503935556563657e-11},
    {4.01746479999999978e-05, 9.99999999596499434e-01, 2.00873239959473765e-05, 2.01750292713352536e-10},
    {8.40896419999999969e-05, 9.99999998232233067e-01, 4.20448209628372749e-05, 8.83883485940187098e-10},
    {1.76008206999999999e-04, 9.99999992255277803e-01, 8.80041031592163374e-05, 3.87236110642256941e-09},
    {3.68403150000000000e-04, 9.99999966069780033e-01, 1.84201571875000012e-04, 1.69651099243636722e-08},
    {7.71105412999999987e-04, 9.99999851349116065e-01, 3.85552677843624327e-04, 7.43254410618898094e-08},
    {1.61400237100000005e-03, 9.99999348749192607e-01, 8.07000922719898961e-04, 3.25625386011249792e-07},
    {3.37827177999999988e-03, 9.99997146821980265e-01, 1.68913348029673012e-03, 1.42658867067079230e-06},
    {7.07106781199999968e-03, 9.99987500039062005e-01, 3.53551180895912221e-03, 6.24997395861182890e-06},
    {1.48004670030000007e-02, 9.99945237293877742e-01, 7.40003087216903766e-03, 2.73812281024331559e-05},
    {3.09788888089999985e-02, 9.99760091502404302e-01, 1.54875863426828658e-02, 1.19951850435738206e-04},
    {6.48419777330000030e-02, 9.98949155662247512e-01, 3.24039526679544970e-02, 5.25376141342704718e-04},
    {1.35720880830000001e-01, 9.95400259511696639e-01, 6.77043102918892525e-02, 2.29898732260131128e-03},
    {2.84077662916999985e-01, 9.79926500492815267e-01, 1.40610822409476310e-01, 1.00198470351077762e-02},
    {5.94603557501000024e-01, 9.13545701442820879e-01, 2.84354908716399346e-01, 4.29063921554286784e-02},
    {1.24456596468199998e+00, 6.48677314940630745e-01, 5.09327665737200341e-01, 1.69805080032043920e-01},
    {2.60500365479299978e+00, -9.91572816438266169e-02, 4.69424127703915450e-01, 4.59559177311199163e-01},
    {3.83170597020800008e+00, -4.02759395702552980e-01, -1.96450987846921968e-13, 4.02759395702450451e-01},
    {5.45253866332600001e+00, -2.31054694011801273e-02, -3.43697421253321644e-01, -1.02963300570152558e-01},
    {7.99899999999999967e+00, 1.71885372282320453e-01, 2.34493901227937396e-01, -1.13254568124816407e-01},
    {8.00000000000000000e+00, 1.71650807137553901e-01, 2.34636346853914629e-01, -1.12991720424075251e-01},
    {8.00099999999999945e+00, 1.71416099671532762e-01, 2.34778543719600580e-01, -1.12728799654134793e-01},
    {1.01734681350630005e+01, -2.49704877057843194e-01, -6.95277779143694555e-14, 2.49704877057829538e-01},
    {1.14127202164810004e+01, -8.73792386608767541e-02, -2.23331545282054844e-01, 4.82419355384285375e-02},
    {1.69989999999999988e+01, -1.69951838571593961e-01, -9.75043302452039684e-02, 1.58480066085541382e-01},
    {1.70000000000000000e+01, -1.69854252151183549e-01, -9.76684927577806533e-02, 1.58363841238503472e-01},
    {1.70010000000000012e+01, -1.69756501621739497e-01, -9.78325482863540846e-02, 1.58247467060672026e-01},
    {2.38879888400850007e+01, -7.31355763161501277e-02, -1.47492034798211963e-01, 6.07869407080562016e-02},
    {2.50000000000000000e+01, 9.62667832759581121e-02, -1.25350249580289896e-01, -1.06294803242381303e-01},
    {5.00000000000000000e+01, 5.58123276692518155e-02, -9.75118281251751429e-02, -5.97128007942588218e-02},
    {6.00000000000000000e+01, -9.14718040890618728e-02, 4.65983837581663146e-02, 9.30250835476674198e-02},
    {1.23456000000000003e+02, -7.10300624183706902e-02, -1.08395848565206489e-02, 7.08544600198397073e-02},
    {5.00000000000000000e+02, -3.41005568807319984e-02, 1.04726134703722936e-02, 3.41424473346134891e-02},
    {1.23450000000000000e+03, -1.35503796180357211e-02, 1.82175083373924997e-02, 1.35798936048115697e-02},
}};
