// Frozen reference values computed with mpmath at 40 significant digits.
#pragma once

namespace ref {

struct Triple { double a, b, value; };
struct Quad { int n; double s, value; };

// {nu, s, J_nu(s)}
inline constexpr Triple kBesselJ[] = {
    {0.5, 0.1, 0.25189294032600094573},
    {0.5, 1.0, 0.67139670714180309042},
    {0.5, 3.7, -0.21977625985052777764},
    {0.5, 8.0, 0.27909280857099206145},
    {0.5, 12.5, -0.014967249458668382989},
    {0.5, 15.5, 0.041843294744402807227},
    {0.5, 20.0, 0.16288076385502987091},
    {0.5, 33.3, 0.13153719043550375598},
    {0.5, 75.0, -0.035727009681702580969},
    {0.5, 250.0, -0.048975416192754932095},
    {0.5, 1000.0, 0.02086326660509382773},
    {0.5, 9999.0, 0.0050754933993810550102},
    {1.0, 0.1, 0.049937526036241997556},
    {1.0, 1.0, 0.44005058574493351596},
    {1.0, 3.7, 0.053833987745461864015},
    {1.0, 8.0, 0.23463634685391462438},
    {1.0, 12.5, -0.16548380461475971846},
    {1.0, 15.5, 0.16721318035174714327},
    {1.0, 20.0, 0.066833124175850045579},
    {1.0, 33.3, 0.12386214790148026},
    {1.0, 75.0, -0.085139995044829103941},
    {1.0, 250.0, -0.043269038410330749511},
    {1.0, 1000.0, 0.0047283119070895239176},
    {1.0, 9999.0, 0.0079424897098126263364},
    {1.5, 0.1, 0.0084020343015001428999},
    {1.5, 1.0, 0.2402978391234270109},
    {1.5, 3.7, 0.29239326992365822469},
    {1.5, 8.0, 0.0759314028117070703},
    {1.5, 12.5, -0.22637633819446598575},
    {1.5, 15.5, 0.20099576520677284734},
    {1.5, 20.0, -0.064662866592310355005},
    {1.5, 33.3, 0.046560843925263306685},
    {1.5, 75.0, -0.085398939051136249289},
    {1.5, 250.0, -0.012356810274606197844},
    {1.5, 1000.0, -0.014168706104322200496},
    {1.5, 9999.0, 0.0061574314118751590518},
    {2.0, 0.1, 0.0012489586587999188454},
    {2.0, 1.0, 0.11490348493190048047},
    {2.0, 3.7, 0.42832965620657589713},
    {2.0, 8.0, -0.11299172042407525},
    {2.0, 12.5, -0.17336146343878265726},
    {2.0, 15.5, 0.13080654513898528374},
    {2.0, 20.0, -0.16034135192299815017},
    {2.0, 33.3, -0.055899317905389953097},
    {2.0, 75.0, -0.036914313672959165576},
    {2.0, 250.0, 0.025707221117921587668},
    {2.0, 1000.0, -0.024777229528605995513},
    {2.0, 9999.0, 0.00076617614284683958467},
    {2.5, 0.1, 0.00016808871900334127033},
    {2.5, 1.0, 0.049496810228477942271},
    {2.5, 3.7, 0.45685188411295336523},
    {2.5, 8.0, -0.25061853251660191009},
    {2.5, 12.5, -0.03936307170800345359},
    {2.5, 15.5, -0.0029408885753499980651},
    {2.5, 20.0, -0.17258019384387642416},
    {2.5, 33.3, -0.12734251981160616078},
    {2.5, 75.0, 0.032311052119657130998},
    {2.5, 250.0, 0.048827134469459657721},
    {2.5, 1000.0, -0.020905772723406794331},
    {2.5, 9999.0, -0.0050736459852160759646},
    {3.0, 0.1, 0.000020820315754756261429},
    {3.0, 1.0, 0.019563353982668405919},
    {3.0, 3.7, 0.40922510004543099774},
    {3.0, 8.0, -0.29113220706595224938},
    {3.0, 12.5, 0.11000813631434926814},
    {3.0, 15.5, -0.1334566525739444894},
    {3.0, 20.0, -0.098901394560449675613},
    {3.0, 33.3, -0.13057678068290848259},
    {3.0, 75.0, 0.083171231648937948444},
    {3.0, 250.0, 0.043680353948217494914},
    {3.0, 1000.0, -0.0048274208252039478996},
    {3.0, 9999.0, -0.0079421832087053768756},
    {3.5, 0.1, 0.0000024016486669206168019},
    {3.5, 1.0, 0.00718621201896270046},
    {3.5, 3.7, 0.32497414103979226886},
    {3.5, 8.0, -0.23256798563458326411},
    {3.5, 12.5, 0.21063110951126460431},
    {3.5, 15.5, -0.20194443894075671768},
    {3.5, 20.0, 0.021517818131341248964},
    {3.5, 33.3, -0.065681342395474441937},
    {3.5, 75.0, 0.087553009192446724689},
    {3.5, 250.0, 0.013333352963995390998},
    {3.5, 1000.0, 0.014064177240705166524},
    {3.5, 9999.0, -0.0061599684885754371176},
    {4.0, 0.1, 0.00000026028648545684032338},
    {4.0, 1.0, 0.0024766389641099550438},
    {4.0, 3.7, 0.23527861413736626138},
    {4.0, 8.0, -0.10535743487538893704},
    {4.0, 12.5, 0.22616536886967030596},
    {4.0, 15.5, -0.1824671848450283119},
    {4.0, 20.0, 0.13067093355486324749},
    {4.0, 33.3, 0.03237197003459563191},
    {4.0, 75.0, 0.043568012204874201451},
    {4.0, 250.0, -0.02465889262316436779},
    {4.0, 1000.0, 0.024748265003654771826},
    {4.0, 9999.0, -0.00077094192935071319816},
    {4.5, 0.1, 0.000000026687681101905798548},
    {4.5, 1.0, 0.00080667390426096094871},
    {4.5, 3.7, 0.15796405839476173802},
    {4.5, 8.0, 0.047121545086341553996},
    {4.5, 12.5, 0.157316493034311632},
    {4.5, 15.5, -0.088259825784991745403},
    {4.5, 20.0, 0.1801114301898458613},
    {4.5, 33.3, 0.1135356310197646865},
    {4.5, 75.0, -0.02413943792836210336},
    {4.5, 250.0, -0.048453800586467786773},
    {4.5, 1000.0, 0.021004221964091730497},
    {4.5, 9999.0, 0.0050693335760331548665},
    {5.0, 0.1, 0.000000002603081790964440834},
    {5.0, 1.0, 0.00024975773021123443138},
    {5.0, 3.7, 0.099485417008333891718},
    {5.0, 8.0, 0.18577477219056331234},
    {5.0, 12.5, 0.034737699762239727682},
    {5.0, 15.5, 0.039280041041026650998},
    {5.0, 20.0, 0.15116976798239497461},
    {5.0, 33.3, 0.13835383054106959536},
    {5.0, 75.0, -0.078523977013751366956},
    {5.0, 250.0, -0.044469438512158754683},
    {5.0, 1000.0, 0.0050254069452331860742},
    {5.0, 9999.0, 0.0079415663934803738047},
};

// {n, s, rho_n(s)}
inline constexpr Quad kRho[] = {
    {3, 0.0, 1.0},
    {3, 0.3, 0.98506735553779858368},
    {3, 2.0, 0.4546487134128408477},
    {3, 5.9, -0.063368926242412942341},
    {3, 6.1, -0.029862705618376318037},
    {3, 14.0, 0.070757668263919307705},
    {3, 16.0, -0.017993957291566580924},
    {3, 50.0, -0.0052474970740785757183},
    {3, 400.0, -0.0021272983990979412016},
    {4, 0.0, 1.0},
    {4, 0.3, 0.98879210848736005161},
    {4, 2.0, 0.5767248077568733872},
    {4, 5.9, -0.10004828634881902504},
    {4, 6.1, -0.083890089363404274612},
    {4, 14.0, 0.019053593528399036158},
    {4, 16.0, 0.01129964695766302328},
    {4, 50.0, -0.0039004731250070055065},
    {4, 400.0, -0.000046110292142931756271},
    {5, 0.0, 1.0},
    {5, 0.3, 0.9910288804064188014},
    {5, 2.0, 0.65309666246998742602},
    {5, 5.9, -0.085393337286967711857},
    {5, 6.1, -0.081682166949284674654},
    {5, 14.0, -0.0010098910705701166308},
    {5, 16.0, 0.011011705348029117902},
    {5, 50.0, -0.0011642562306794302197},
    {5, 400.0, 0.0000098094195045644631767},
    {6, 0.0, 1.0},
    {6, 0.3, 0.99252106213901902575},
    {6, 2.0, 0.7056680572312754383},
    {6, 5.9, -0.051038584531259224021},
    {6, 6.1, -0.056152972127094391619},
    {6, 14.0, -0.0062048931666146784859},
    {6, 16.0, 0.0058187100294153815034},
    {6, 50.0, -0.00019108096254162822564},
    {6, 400.0, 0.0000019389535619320511979},
    {7, 0.0, 1.0},
    {7, 0.3, 0.99358747810336961978},
    {7, 2.0, 0.74417980896429966871},
    {7, 5.9, -0.0094905534521206993029},
    {7, 6.1, -0.020889328674109791703},
    {7, 14.0, -0.0054924152551905171686},
    {7, 16.0, 0.0016995505452888104781},
    {7, 50.0, 0.000024499445060394872991},
    {7, 400.0, 0.00000020035385799398490607},
    {8, 0.0, 1.0},
    {8, 0.3, 0.99438764044239310317},
    {8, 2.0, 0.77365949684641230659},
    {8, 5.9, 0.033790084562523275621},
    {8, 6.1, 0.017890105177947788009},
    {8, 14.0, -0.003092875921838414038},
    {8, 16.0, -0.00051383783702321641654},
    {8, 50.0, 0.000035610164759667621896},
    {8, 400.0, 0.0000000072073868557295711204},
    {9, 0.0, 1.0},
    {9, 0.3, 0.99501021548087381278},
    {9, 2.0, 0.79697753182523212356},
    {9, 5.9, 0.076317076536042672778},
    {9, 6.1, 0.057182191336498814923},
    {9, 14.0, -0.00080045074725364295318},
    {9, 16.0, -0.0012731461644371514056},
    {9, 50.0, 0.000016642579460357551298},
    {9, 400.0, -0.0000000021019831101872921217},
    {10, 0.0, 1.0},
    {10, 0.3, 0.99550842846617462713},
    {10, 2.0, 0.8158972753816424195},
    {10, 5.9, 0.11697144833385693717},
    {10, 6.1, 0.095513778840151158886},
    {10, 14.0, 0.00076212667219010557908},
    {10, 16.0, -0.00118735272495723711},
    {10, 50.0, 0.0000043524696441848802726},
    {10, 400.0, -0.00000000057952385252289648803},
    {11, 0.0, 1.0},
    {11, 0.3, 0.99591616425293510134},
    {11, 2.0, 0.83156413505968616376},
    {11, 5.9, 0.15529677360684551684},
    {11, 6.1, 0.13218236389863859762},
    {11, 14.0, 0.0015081314489797095692},
    {11, 16.0, -0.00073156208090912343232},
    {11, 50.0, -0.00000019799301312094050666},
    {11, 400.0, -0.000000000079716987434767803038},
    {12, 0.0, 1.0},
    {12, 0.3, 0.99625602113913240977},
    {12, 2.0, 0.84475557070460225811},
    {12, 5.9, 0.19116659298209402251},
    {12, 6.1, 0.16688776922806422118},
    {12, 14.0, 0.0015734704465422529049},
    {12, 16.0, -0.0002104734024793814667},
    {12, 50.0, -0.0000010002462436954477319},
    {12, 400.0, -0.0000000000038934553541262338042},
};

// first positive zero of rho_n, n = 3..12
inline constexpr double kFirstZero[] = {
    3.1415926535897932385,
    3.8317059702075123156,
    4.4934094579090641753,
    5.1356223018406825563,
    5.7634591968945497914,
    6.3801618959239835062,
    6.987932000500519959,
    7.5883424345038043851,
    8.1825614525712427017,
    8.7714838159599540191,
};

// {n, s, 2F1(1/2, (3-n)/2; 3/2; s)}
inline constexpr Quad kHypFirst[] = {
    {3, 0.1, 1.0},
    {3, 0.5, 1.0},
    {3, 0.75, 1.0},
    {3, 0.76, 1.0},
    {3, 0.9, 1.0},
    {3, 0.999, 1.0},
    {3, 1.0, 1.0},
    {4, 0.1, 0.98307394418290316511},
    {4, 0.5, 0.90891375786306954308},
    {4, 0.75, 0.85459978807807261686},
    {4, 0.76, 0.85222597958401578465},
    {4, 0.9, 0.81641880677221198103},
    {4, 0.999, 0.78578060788360136892},
    {4, 1.0, 0.78539816339744830962},
    {5, 0.1, 0.96666666666666666667},
    {5, 0.5, 0.83333333333333333333},
    {5, 0.75, 0.75},
    {5, 0.76, 0.74666666666666666667},
    {5, 0.9, 0.7},
    {5, 0.999, 0.667},
    {5, 1.0, 0.66666666666666666667},
    {6, 0.1, 0.95075920019854297874},
    {6, 0.5, 0.77007366604562059786},
    {6, 0.75, 0.67219984105855446265},
    {6, 0.76, 0.66856336160140997567},
    {6, 0.9, 0.6202197992295799341},
    {6, 0.999, 0.58934336160685144764},
    {6, 1.0, 0.58904862254808623221},
    {7, 0.1, 0.93533333333333333333},
    {7, 0.5, 0.71666666666666666667},
    {7, 0.75, 0.6125},
    {7, 0.76, 0.60885333333333333333},
    {7, 0.9, 0.562},
    {7, 0.999, 0.5336002},
    {7, 1.0, 0.53333333333333333333},
    {8, 0.1, 0.92037157873560517857},
    {8, 0.5, 0.67119083758745664507},
    {8, 0.75, 0.56537486754879538554},
    {8, 0.76, 0.56183915497398534834},
    {8, 0.9, 0.51737687896801134164},
    {8, 0.999, 0.49111947327617230664},
    {8, 1.0, 0.49087385212340519351},
    {9, 0.1, 0.90585714285714285714},
    {9, 0.5, 0.63214285714285714286},
    {9, 0.75, 0.52723214285714285714},
    {9, 0.76, 0.52384914285714285714},
    {9, 0.9, 0.48185714285714285714},
    {9, 0.999, 0.45737160014285714286},
    {9, 1.0, 0.45714285714285714286},
    {10, 0.1, 0.89177389692850760123},
    {10, 0.5, 0.5983405263450643695},
    {10, 0.75, 0.49567957160519596235},
    {10, 0.76, 0.49245580425734304615},
    {10, 0.9, 0.45274429756776202868},
    {10, 0.999, 0.42972953912060361539},
    {10, 1.0, 0.42951462060797954432},
    {11, 0.1, 0.87810634920634920635},
    {11, 0.5, 0.56884920634920634921},
    {11, 0.75, 0.46908482142857142857},
    {11, 0.76, 0.46601232253968253968},
    {11, 0.9, 0.42832857142857142857},
    {11, 0.999, 0.40655253346042857143},
    {11, 1.0, 0.40634920634920634921},
    {12, 0.1, 0.8648396184207510515},
    {12, 0.5, 0.54292589109297385458},
    {12, 0.75, 0.44630692694467636611},
    {12, 0.76, 0.44337276021338906787},
    {12, 0.9, 0.40747303008864599419},
    {12, 0.999, 0.38675658520854641613},
    {12, 1.0, 0.38656315854718158989},
};

// {n, s, 2F1((3-n)/2, (n-1)/2; (n+1)/2; s)}
inline constexpr Quad kHypSecond[] = {
    {3, 0.1, 1.0},
    {3, 0.5, 1.0},
    {3, 0.75, 1.0},
    {3, 0.76, 1.0},
    {3, 0.9, 1.0},
    {3, 0.999, 1.0},
    {3, 1.0, 1.0},
    {4, 0.1, 0.96944231953080559105},
    {4, 0.5, 0.83304055090469367132},
    {4, 0.75, 0.72959978807807261686},
    {4, 0.76, 0.72498401835239135126},
    {4, 0.9, 0.65399669180877348976},
    {4, 0.999, 0.58990164047072048433},
    {4, 1.0, 0.58904862254808623221},
    {5, 0.1, 0.93333333333333333333},
    {5, 0.5, 0.66666666666666666667},
    {5, 0.75, 0.5},
    {5, 0.76, 0.49333333333333333333},
    {5, 0.9, 0.4},
    {5, 0.999, 0.334},
    {5, 1.0, 0.33333333333333333333},
    {6, 0.1, 0.89496982792011142293},
    {6, 0.5, 0.52065034431543354457},
    {6, 0.75, 0.33004157836586359036},
    {6, 0.76, 0.32324148122214616636},
    {6, 0.9, 0.23586628926740295987},
    {6, 0.999, 0.1845386636642170185},
    {6, 1.0, 0.18407769454627694757},
    {7, 0.1, 0.856},
    {7, 0.5, 0.4},
    {7, 0.75, 0.2125},
    {7, 0.76, 0.20656},
    {7, 0.9, 0.136},
    {7, 0.999, 0.1003006},
    {7, 1.0, 0.1},
    {8, 0.1, 0.81731723145152056897},
    {8, 0.5, 0.30371270085066956767},
    {8, 0.75, 0.13442589158672472958},
    {8, 0.76, 0.1296822550461185096},
    {8, 0.9, 0.077257999063368687191},
    {8, 0.999, 0.053877663770697216754},
    {8, 1.0, 0.05368932757599744304},
    {9, 0.1, 0.77942857142857142857},
    {9, 0.5, 0.22857142857142857143},
    {9, 0.75, 0.083928571428571428571},
    {9, 0.76, 0.080356571428571428571},
    {9, 0.9, 0.043428571428571428571},
    {9, 0.999, 0.028686000571428571429},
    {9, 1.0, 0.028571428571428571429},
    {10, 0.1, 0.74262693383004634043},
    {10, 0.5, 0.17083839422850163181},
    {10, 0.75, 0.051874553095021773594},
    {10, 0.76, 0.049294197773940387441},
    {10, 0.9, 0.02422218164880692423},
    {10, 0.999, 0.01516826120559030062},
    {10, 1.0, 0.015100123380749280855},
    {11, 0.1, 0.70707936507936507937},
    {11, 0.5, 0.12698412698412698413},
    {11, 0.75, 0.031808035714285714286},
    {11, 0.76, 0.03000066031746031746},
    {11, 0.9, 0.013428571428571428571},
    {11, 0.999, 0.0079763098021428571429},
    {11, 1.0, 0.0079365079365079365079},
    {12, 0.1, 0.67287562196055480757},
    {12, 0.5, 0.093961116825675897497},
    {12, 0.75, 0.019378742384841316985},
    {12, 0.76, 0.018142541333920359489},
    {12, 0.9, 0.0074089521825269717755},
    {12, 0.999, 0.0041754472788248363779},
    {12, 1.0, 0.0041525339297060522351},
};

// {n, s, f_n(s)}
inline constexpr Quad kDeforming[] = {
    {3, 0.01, 0.9},
    {3, 0.2, 0.55278640450004206072},
    {3, 0.5, 0.2928932188134524756},
    {3, 0.8, 0.10557280900008412144},
    {3, 0.99, 0.0050125628933800452655},
    {4, 0.01, 2.6608093500798259518},
    {4, 0.2, 1.5126318726716387877},
    {4, 0.5, 0.72676045526483731385},
    {4, 0.8, 0.23410419299952726197},
    {4, 0.99, 0.010094136138213861431},
    {5, 0.01, 6.102},
    {5, 0.2, 3.1539630787003617222},
    {5, 0.5, 1.3431457505076198048},
    {5, 0.8, 0.38123878660062249863},
    {5, 0.99, 0.015188191511527917764},
    {6, 0.01, 12.834756145507397899},
    {6, 0.2, 5.959677833407437725},
    {6, 0.5, 2.2093890947457990072},
    {6, 0.8, 0.54695312230006013525},
    {6, 0.99, 0.020303735462874533745},
    {7, 0.01, 26.02494},
    {7, 0.2, 10.768056939581902827},
    {7, 0.5, 3.4228355337246465484},
    {7, 0.8, 0.73258385656284666941},
    {7, 0.99, 0.025444090408656837143},
    {8, 0.01, 51.896761390541622173},
    {8, 0.2, 19.033407170912495769},
    {8, 0.5, 5.1213120168815156317},
    {8, 0.8, 0.94011794962927267865},
    {8, 0.99, 0.030610139499439165885},
    {9, 0.01, 102.695022},
    {9, 0.2, 33.281918927028814244},
    {9, 0.5, 7.4989539794734683763},
    {9, 0.8, 1.1719827701318342037},
    {9, 0.99, 0.035802173185546487653},
    {10, 0.01, 202.52281633399815287},
    {10, 0.2, 57.90828692153328007},
    {10, 0.5, 10.828829161066038989},
    {10, 0.8, 1.4309862367191514529},
    {10, 0.99, 0.041020355194743720085},
    {11, 0.01, 398.85032043},
    {11, 0.2, 100.56882830272260131},
    {11, 0.5, 15.494923083526822276},
    {11, 0.8, 1.7203128621758980729},
    {11, 0.99, 0.04626482382195556897},
    {12, 0.01, 785.21203631638259267},
    {12, 0.2, 174.61996937078506964},
    {12, 0.5, 22.037238588335225221},
    {12, 0.8, 2.0435450997839009296},
    {12, 0.99, 0.051535712794468243338},
};

}  // namespace ref
