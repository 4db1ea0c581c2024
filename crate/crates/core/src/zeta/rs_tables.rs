// Chebyshev coefficients on z in [-1, 1] for the correction functions
// C_0 .. C_11 of the Riemann-Siegel expansion of Hardy's Z. C_0(z) equals
// cos(pi*(z^2/2 + 3/8))/cos(pi*z); the higher ones are combinations of its
// derivatives. Evaluate with Clenshaw recurrence. Regenerate with
// tools/rs_table_gen.py (writes this file).

pub(super) const RS_CHEB: [&[f64]; 12] = [
    // C_0: 29 terms
    &[
        0.6426672862397684, 0.0, 0.27197299999785507, 0.0,
        0.010738605819340285, 0.0, -0.0013743815296336614, 0.0,
        -0.00012468221880320676, 0.0, -5.764599706783048e-07, 0.0,
        2.728067429580452e-07, 0.0, 8.07795305950047e-09, 0.0,
        -2.0884608068869654e-10, 0.0, -1.3115561854739528e-11, 0.0,
        -1.4207987228087186e-14, 0.0, 1.0271701357931162e-14, 0.0,
        1.3974598819518373e-16, 0.0, -4.4841187339522885e-18, 0.0,
        -1.1830599573845289e-19,
    ],
    // C_1: 30 terms
    &[
        0.0, -0.010697913921003001, 0.0, -0.017170651243377882,
        0.0, -0.002793211149788471, 0.0, 3.6375653719275045e-05,
        0.0, 2.7108955231150888e-05, 0.0, 1.0483749866752774e-06,
        0.0, -5.886467166527572e-08, 0.0, -4.322967268502779e-09,
        0.0, 1.1369591588273712e-11, 0.0, 6.6998339103553274e-12,
        0.0, 1.0079997652808475e-13, 0.0, -5.152488009222117e-15,
        0.0, -1.521695447183697e-16, 0.0, 1.8619464833687103e-18,
        0.0, 1.1301846184246265e-19,
    ],
    // C_2: 33 terms
    &[
        0.0031461158539889122, 0.0, -0.0023087838845307503, 0.0,
        5.769820766689844e-05, 0.0, 0.000352388620236659, 0.0,
        2.5246667458684434e-05, 0.0, -3.442821197193136e-06, 0.0,
        -3.535074556622459e-07, 0.0, 3.730830183792625e-09, 0.0,
        1.2776951864116635e-09, 0.0, 2.1874616204147057e-11, 0.0,
        -1.914141096461037e-12, 0.0, -6.562883102168523e-14, 0.0,
        1.2586009182411715e-15, 0.0, 8.140076623881463e-17, 0.0,
        -5.423874275488608e-20, 0.0, -5.796980131086543e-20, 0.0,
        -5.382916503746397e-22,
    ],
    // C_3: 34 terms
    &[
        0.0, -7.123256221203874e-05, 0.0, -0.00023234305298164808,
        0.0, 0.00012929912045472474, 0.0, -1.807449641367144e-05,
        0.0, -6.5261851872204395e-06, 0.0, 1.1696365378521986e-07,
        0.0, 7.349476126518126e-08, 0.0, 1.7750910077907072e-09,
        0.0, -2.555552961326525e-10, 0.0, -1.13766366005373e-11,
        0.0, 3.349863898530277e-13, 0.0, 2.5537379354163893e-14,
        0.0, -6.766500771321871e-17, 0.0, -2.976888471991973e-17,
        0.0, -2.9952208087566915e-19, 0.0, 2.0461188497575094e-20,
        0.0, 4.0869264533289968e-22,
    ],
    // C_4: 35 terms
    &[
        0.0001676574524669686, 0.0, -0.00022728768943416726, 0.0,
        6.477387188445696e-05, 0.0, -8.49220050012541e-06, 0.0,
        -2.6161407245219076e-06, 0.0, 8.336764968733215e-07, 0.0,
        6.324704037544833e-08, 0.0, -1.0059949403001072e-08, 0.0,
        -7.822677204130333e-10, 0.0, 3.16765828534986e-11, 0.0,
        3.5006944702052894e-12, 0.0, -1.4314814511443748e-14, 0.0,
        -7.269402707921764e-15, 0.0, -8.780556594835957e-17, 0.0,
        8.15025447495458e-18, 0.0, 1.9208397058220854e-19, 0.0,
        -5.175655213953057e-21, 0.0, -1.976773672441334e-22,
    ],
    // C_5: 34 terms
    &[
        0.0, -8.828845234808902e-05, 0.0, 1.562868496932839e-05,
        0.0, 1.8342447697160084e-07, 0.0, -2.1097267874937543e-06,
        0.0, 6.657016174096388e-07, 0.0, -2.771474120506843e-08,
        0.0, -1.8111249375764875e-08, 0.0, 5.765890811715977e-10,
        0.0, 1.8675033426083153e-10, 0.0, 1.1051608917093021e-13,
        0.0, -7.870643368056824e-13, 0.0, -1.445835099565512e-14,
        0.0, 1.581459190860953e-15, 0.0, 4.91063883036379e-17,
        0.0, -1.6444201220666742e-18, 0.0, -7.778017917522776e-20,
        0.0, 7.932226879727492e-22,
    ],
    // C_6: 33 terms
    &[
        1.2189742141068971e-05, 0.0, -1.3829760140503787e-05, 0.0,
        5.11096730499826e-06, 0.0, -2.0458136450386076e-06, 0.0,
        4.938136644832012e-07, 0.0, -3.6187528349622816e-08, 0.0,
        -1.287690509807986e-08, 0.0, 2.574412111144866e-09, 0.0,
        1.3641457070791684e-10, 0.0, -3.032439574084382e-11, 0.0,
        -1.3216671239902537e-12, 0.0, 1.3031652130009368e-13, 0.0,
        6.635883553200669e-15, 0.0, -2.460035654793285e-16, 0.0,
        -1.681527920816934e-17, 0.0, 1.8937932080308732e-19, 0.0,
        2.430650612686566e-20,
    ],
    // C_7: 34 terms
    &[
        0.0, -1.2768657797438219e-05, 0.0, 3.862933834641599e-06,
        0.0, -1.369383093646788e-06, 0.0, 2.764704168279349e-07,
        0.0, -1.028343682334521e-08, 0.0, -1.1755066568169087e-08,
        0.0, 3.0550489158469952e-09, 0.0, -1.1430441899346973e-10,
        0.0, -5.1308186753601974e-11, 0.0, 2.835509910251451e-12,
        0.0, 4.2666541616499315e-13, 0.0, -1.2763573008517356e-14,
        0.0, -1.85690800324621e-15, 0.0, 1.536428707899602e-17,
        0.0, 4.4115590388721885e-18, 0.0, 2.2542348908023127e-20,
        0.0, -6.1742692823043695e-21,
    ],
    // C_8: 35 terms
    &[
        1.228558508809108e-06, 0.0, -1.1940986396077243e-06, 0.0,
        -6.099999653919517e-08, 0.0, -8.844063913885954e-09, 0.0,
        3.169816317194402e-08, 0.0, -1.4200472095883398e-08, 0.0,
        3.161410591547148e-09, 0.0, -2.443631526211608e-10, 0.0,
        -4.322631236563438e-11, 0.0, 9.017681907739494e-12, 0.0,
        1.469890792000878e-13, 0.0, -8.703305382471118e-14, 0.0,
        -8.37977080338743e-16, 0.0, 3.8874550686516895e-16, 0.0,
        6.240685071045338e-18, 0.0, -9.229170889806594e-19, 0.0,
        -2.159242782327039e-20, 0.0, 1.2647333880229965e-21,
    ],
    // C_9: 36 terms
    &[
        0.0, -3.0207970438542928e-06, 0.0, 7.069522324295643e-07,
        0.0, -2.211652030252859e-07, 0.0, 6.515797612803995e-08,
        0.0, -1.620873398111175e-08, 0.0, 2.94852983420573e-09,
        0.0, -2.3545287037397225e-10, 0.0, -4.051032345513684e-11,
        0.0, 1.2906638267524521e-11, 0.0, -7.518327926019768e-13,
        0.0, -1.2819168042620265e-13, 0.0, 1.1897420906598969e-14,
        0.0, 7.626057029992967e-16, 0.0, -6.0335294980159e-17,
        0.0, -3.1001730691468172e-18, 0.0, 1.4656813699265523e-19,
        0.0, 7.961394621592255e-21, 0.0, -1.8880124433415202e-22,
    ],
    // C_10: 35 terms
    &[
        6.981157928224484e-08, 0.0, 5.1876020997819027e-08, 0.0,
        -1.5025689400416704e-07, 0.0, 5.385175415429129e-08, 0.0,
        -1.2009470947212668e-08, 0.0, 1.8441416112134046e-09, 0.0,
        -6.051285922582072e-11, 0.0, -5.891392764479606e-11, 0.0,
        1.6515772641433206e-11, 0.0, -1.6489918275471838e-12, 0.0,
        -8.450007409432356e-14, 0.0, 3.0235180175816966e-14, 0.0,
        -6.179201142870488e-16, 0.0, -2.15064803987676e-16, 0.0,
        5.236056507354336e-18, 0.0, 8.702925894851528e-19, 0.0,
        -1.2723037085299226e-20, 0.0, -2.1527902678766476e-21,
    ],
    // C_11: 36 terms
    &[
        0.0, -7.205266886247995e-07, 0.0, 9.524651967693347e-08,
        0.0, -6.860710333614463e-09, 0.0, 1.086186077215767e-09,
        0.0, -5.647654554645639e-10, 0.0, 3.030313572207572e-10,
        0.0, -1.0161023511499454e-10, 0.0, 2.121869533948738e-11,
        0.0, -2.3594065730011843e-12, 0.0, -2.4935616670014248e-14,
        0.0, 4.488725173597988e-14, 0.0, -4.0938445356351784e-15,
        0.0, -2.1625608319687457e-16, 0.0, 4.048561048328343e-17,
        0.0, 5.797486222018371e-19, 0.0, -1.8192500133097689e-19,
        0.0, -1.8843771402680474e-21, 0.0, 4.948165327598364e-22,
    ],
];
