// Generated by tools/reference_values.py (mpmath at 50..120 digit
// precision, correctly rounded to f64). Do not edit by hand.
#![allow(dead_code, clippy::excessive_precision)]

pub const K_GRID_ALPHAS: [f64; 5] = [0.0, 0.3, 0.5, 1.5, 3.0];
pub const K_GRID_XS: [f64; 20] = [
    0.0010000000000000000,
    0.0017204337784861751,
    0.0029598923861562173,
    0.0050922988418272017,
    0.0087609629376255458,
    0.015072656569956458,
    0.025931507494474660,
    0.044613441420561606,
    0.076754471594448433,
    0.13205098558094671,
    0.22718497607585157,
    0.39085670680546861,
    0.67244308093599546,
    1.1568937905515995,
    1.9903591553858820,
    3.4242811222450849,
    5.8912489097429914,
    10.135503621791694,
    17.437462792899397,
    30.000000000000000,
];
// K_GRID_VALUES[i][j] = K(alpha_i, x_j)
pub const K_GRID_VALUES: [[f64; 20]; 5] = [
    [
        7.0236888005623813,
        6.4811158746386412,
        5.9385490800622504,
        5.3959988914473427,
        4.8534932902227233,
        4.3111061539590051,
        3.7690296874144061,
        3.2277545374961220,
        2.6885018950233457,
        2.1542065797241789,
        1.6315730364408418,
        1.1347803614362217,
        0.69030547600793630,
        0.33789211996485555,
        0.11525088095378332,
        0.021359571093791104,
        0.0013991873129469601,
        1.5425115989638689e-5,
        7.9670135702009047e-9,
        2.1324774964630564e-14,
    ],
    [
        14.406547529041028,
        12.170126797671603,
        10.256877883522757,
        8.6160141848824945,
        7.2040070498847486,
        5.9834665012578218,
        4.9222365636147575,
        3.9927499733295085,
        3.1717753475398356,
        2.4408510608089342,
        1.7879247980776310,
        1.2107646182537656,
        0.72158784491291056,
        0.34792878698927787,
        0.11742854137416798,
        0.021609710108662321,
        0.0014091341892823459,
        1.5490670803973555e-5,
        7.9870424061653046e-9,
        2.1356270283260949e-14,
    ],
    [
        39.593659513116644,
        30.164336936935581,
        22.968705153861348,
        17.473964137849371,
        13.273308214681590,
        10.055856448803244,
        7.5837524032664826,
        5.6748149524236576,
        4.1896143840303594,
        3.0223176031986083,
        2.0951009470088704,
        1.3561391175262699,
        0.78017827810590514,
        0.36642120964647616,
        0.12139260045155319,
        0.022061185014995883,
        0.0014269848400508836,
        1.5607882167674034e-5,
        8.0227714841521418e-9,
        2.1412375659560114e-14,
    ],
    [
        39633.253172629760,
        17563.147770613441,
        7782.9485143147696,
        3448.9230366709572,
        1528.3245998571742,
        677.21472138619323,
        300.03695455059193,
        132.87448329740428,
        58.774243748261298,
        25.909822682408638,
        11.317105778478742,
        4.8257971633359515,
        1.9403928750349858,
        0.68314968778254506,
        0.18238289967622661,
        0.028503759157545183,
        0.0016692059483274199,
        1.7147803887411426e-5,
        8.4828597194325087e-9,
        2.2126121514878784e-14,
    ],
    [
        7999999000.0001250,
        1570999128.0162530,
        308504672.96400912,
        60582463.912566615,
        11896803.570540726,
        2336190.4399453418,
        458743.78104303139,
        90070.956326688818,
        17679.062384697572,
        3466.7253652586226,
        677.88805157600670,
        131.46706009932877,
        24.897667483458091,
        4.4140240529972016,
        0.65932117084812193,
        0.065825863952754814,
        0.0028124798404292845,
        2.3515619732751824e-5,
        1.0235461164157173e-8,
        2.4713310636589929e-14,
    ],
];

pub const K_DENSE_ALPHAS: [f64; 3] = [0.0, 0.3, 3.0];
pub const K_DENSE_XS: [f64; 40] = [
    0.0010000000000000000,
    0.0013025607302937148,
    0.0016966644561032956,
    0.0022100084930052971,
    0.0028786702766042919,
    0.0037496428577684964,
    0.0048841375391555445,
    0.0063618857598573930,
    0.0082867425614050305,
    0.010793985442539745,
    0.014059821560814297,
    0.018313771440053587,
    0.023854799501388378,
    0.031072325059538589,
    0.040473590421476279,
    0.052719309497006842,
    0.068670102279001606,
    0.089446978573880420,
    0.11651012173375994,
    0.15176150925213596,
    0.19767858232193857,
    0.25748835855269052,
    0.33539422435852245,
    0.43687134581673103,
    0.56905145925143919,
    0.74122408433725872,
    0.96548938460562976,
    1.2576085579027384,
    1.6381115216054164,
    2.1337397398848995,
    2.7793255938411958,
    3.6202403752378005,
    4.7155829470085415,
    6.1423331672160337,
    8.0007619759962230,
    10.421478362359825,
    13.574608466415560,
    17.681751917465496,
    23.031555690486148,
    30.000000000000000,
];
pub const K_DENSE_VALUES: [[f64; 40]; 3] = [
    [
        7.0236888005623813,
        6.7593579663925411,
        6.4950279495588484,
        6.2306992650539798,
        5.9663727487382516,
        5.7020497544674024,
        5.4377324701554049,
        5.1734244228163131,
        4.9091312825040224,
        4.6448621365151670,
        4.3806314989550044,
        4.1164624619911553,
        3.8523916046092813,
        3.5884765792692630,
        3.3248077280494992,
        3.0615256680282396,
        2.7988475448815670,
        2.5371055488339321,
        2.2768021693742949,
        2.0186871575857846,
        1.7638604800387023,
        1.5139022426934256,
        1.2710223159292558,
        1.0382060948507650,
        0.81930568704601693,
        0.61898871240606594,
        0.44242142252681220,
        0.29456134609178424,
        0.17902460606513861,
        0.096731512924018485,
        0.044890091069154276,
        0.017103656384071678,
        0.0050447857307352191,
        0.0010668286530526335,
        0.00014635236575872785,
        1.1432038596064163e-5,
        4.2899943361344144e-7,
        6.1975765033236954e-9,
        2.5829303382404675e-11,
        2.1324774964630564e-14,
    ],
    [
        14.406547529041028,
        13.273117383736109,
        12.223199687319861,
        11.250189543058498,
        10.347966439711465,
        9.5108560233847010,
        8.7335948309705370,
        8.0112978470706356,
        7.3394288083735643,
        6.7137732635092313,
        6.1304145134676364,
        5.5857127231233574,
        5.0762877289076086,
        4.5990063974492290,
        4.1509758452472620,
        3.7295444381892701,
        3.3323132625811666,
        2.9571616565202181,
        2.6022912579604032,
        2.2662934827309096,
        1.9482446051448358,
        1.6478292432445021,
        1.3654847580937910,
        1.1025428096570566,
        0.86131735859107425,
        0.64505173200948626,
        0.45760259963284526,
        0.30273798376366723,
        0.18301659810811020,
        0.098452847260870455,
        0.045523733817608972,
        0.017294122889253834,
        0.0050888944826297738,
        0.0010741219787494290,
        0.00014713191936868684,
        1.1479343091054728e-5,
        4.3037509192790824e-7,
        6.2129470931738431e-9,
        2.5878769038048847e-11,
        2.1356270283260949e-14,
    ],
    [
        7999999000.0001250,
        3619894823.3257892,
        1637954921.8660905,
        741153039.20431291,
        335361934.72514465,
        151746789.10878662,
        68663357.536889067,
        31069208.610366287,
        14058361.858891757,
        6361187.2241995418,
        2878324.9951097735,
        1302382.0756793357,
        589293.68082998385,
        266634.48756840523,
        120638.48395200241,
        54579.555237721335,
        24690.562570224223,
        11167.574058888750,
        5049.6667068618861,
        2282.2148806084088,
        1030.6110910176532,
        464.76374548776429,
        209.10133501674947,
        93.708858781256819,
        41.722074356308222,
        18.376172518599853,
        7.9519093071174711,
        3.3447107498121887,
        1.3453821867659152,
        0.50530256907868868,
        0.17130054823007899,
        0.050035070734447431,
        0.011834014356890581,
        0.0020893157521086554,
        0.00024781373291292985,
        1.7237941908062467e-5,
        5.9024060918093364e-7,
        7.9355178306404308e-9,
        3.1268012340460185e-11,
        2.4713310636589929e-14,
    ],
];

pub const EMU_MUS: [f64; 3] = [0.5, 1.0, 2.0];
pub const EMU_ZS: [[f64; 2]; 8] = [
    [1.0000000000000000, 0.0],
    [-1.0000000000000000, 0.0],
    [0.0, 0.50000000000000000],
    [1.0000000000000000, 1.0000000000000000],
    [2.0000000000000000, -1.0000000000000000],
    [3.0000000000000000, 0.0],
    [-2.0000000000000000, 2.0000000000000000],
    [0.0, 4.0000000000000000],
];
// EMU_VALUES[i][j] = e_mu(mu_i, z_j) as [re, im]
pub const EMU_VALUES: [[[f64; 2]; 8]; 3] = [
    [
        [1.8312249817444934, 0.0],
        [0.70090677375952331, 0.0],
        [0.93846980724081290, 0.24226845767487389],
        [1.3026365056331171, 1.1106902825320257],
        [2.5967478152818449, -2.6834499715667924],
        [8.8341628032676335, 0.0],
        [0.30026406067468434, -0.16297617648471195],
        [-0.39714980986384737, -0.066043328023549136],
    ],
    [
        [1.5430806348152438, 0.0],
        [0.80732175247235914, 0.0],
        [0.95885107720840600, 0.16253703063606657],
        [1.2287958228393751, 0.72681263102384667],
        [2.0987881947649226, -1.6222484603004498],
        [5.5820817602392335, 0.0],
        [0.47246420133910282, -0.20534847936886415],
        [-0.18920062382698206, 0.11611074925915746],
    ],
    [
        [1.3183269339027504, 0.0],
        [0.88894971312590349, 0.0],
        [0.97522218381639941, 0.098226639647960476],
        [1.1556165911078153, 0.42640804860229023],
        [1.6786450091513293, -0.86151997993580530],
        [3.3392916424699673, 0.0],
        [0.64725945386547946, -0.19420791229227653],
        [0.087083061944368097, 0.20721276432851262],
    ],
];

pub const EMU_LARGE_MUS: [f64; 3] = [0.5, 1.3, 5.0];
pub const EMU_LARGE_ZS: [[f64; 2]; 10] = [
    [12.000000000000000, 0.0],
    [0.0, 15.000000000000000],
    [9.0000000000000000, 9.0000000000000000],
    [0.0, 30.000000000000000],
    [25.000000000000000, 10.000000000000000],
    [0.0, 80.000000000000000],
    [50.000000000000000, 50.000000000000000],
    [0.0, -40.000000000000000],
    [-30.000000000000000, 5.0000000000000000],
    [-20.000000000000000, -15.000000000000000],
];
pub const EMU_LARGE_VALUES: [[[f64; 2]; 10]; 3] = [
    [
        [37090.274130935140, 0.0],
        [-0.014224472826780773, 0.20510403861352276],
        [-1240.4516364479750, 1303.9093362891535],
        [-0.086367983581040211, -0.11875106261662294],
        [-10209703590.527436, -4157698141.7676844],
        [-0.069742165512210023, -0.056057296675712578],
        [3.8907623835370906e+20, -3.0005164173057565e+20],
        [0.0073668905842372896, -0.12603831803758500],
        [485726791.88731938, 12859120083.387992],
        [87488.305749488413, 778749.30172028156],
    ],
    [
        [7749.4047618670692, 0.0],
        [0.035205100927358907, 0.018114522356394318],
        [-63.166758588208648, 360.92872785960244],
        [-0.014807744233223556, 0.0040984444783896798],
        [-1245751324.6805547, -115462211.83367615],
        [-0.0036349251479805029, 0.0023193049400018066],
        [7.5674196047169089e+18, -2.5103216109032813e+19],
        [0.010326658976361235, -0.0031236688168678506],
        [-310848802.43078123, 3434208975.5784597],
        [140516.30087997095, 201682.34683007466],
    ],
    [
        [216.75336629865325, 0.0],
        [4.8228623357998673e-5, 0.0012314027987617433],
        [9.9207242933417293, -5.4848369300096076],
        [-3.4531032583006829e-5, -2.3921343526298740e-5],
        [-1264041.4830680121, 2848294.4264252832],
        [-2.8858684133248047e-7, -2.2194683915376217e-8],
        [-1471379223185851.8, 1953720374688091.2],
        [5.1545605839743962e-6, -8.2867543877099773e-6],
        [-12718855.327410974, 17243435.392474724],
        [1368.6978138116294, -2874.2707995765195],
    ],
];

pub const ODD_MASS_MUS: [f64; 4] = [0.0, 0.5, 1.0, 2.5];
pub const ODD_MASS_VALUES: [f64; 4] = [
    1.0000000000000000,
    1.5707963267948966,
    2.0000000000000000,
    2.9452431127404312,
];

pub const K_HALF_AT_1: f64 = 0.46106850444789456;
pub const GAMMA_MU1_N3: f64 = 30.0;
pub const GAMMA_MU0_N4: f64 = 24.0;
pub const GAMMA_1_5: f64 = 0.88622692545275801;

