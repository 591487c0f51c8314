#ifndef WAVEMBED_DETAIL_WAVELET_TABLES_HPP
#define WAVEMBED_DETAIL_WAVELET_TABLES_HPP

#include <cstddef>
#include <span>
#include <string_view>

// Decomposition low-pass taps (dec_lo) for the supported orthogonal
// families, in the standard published convention. The high-pass taps are
// derived at construction time via the quadrature mirror relation
// g[k] = (-1)^k h[len-1-k].

namespace wavembed::detail {

inline constexpr double kHaar[] = {
    0.7071067811865476, 0.7071067811865476
};

inline constexpr double kDb2[] = {
    -0.12940952255126037, 0.2241438680420134, 0.8365163037378079,
    0.48296291314453416
};

inline constexpr double kDb3[] = {
    0.03522629188570953, -0.08544127388202666, -0.13501102001025458,
    0.45987750211849154, 0.8068915093110925, 0.33267055295008263
};

inline constexpr double kDb4[] = {
    -0.010597401785069032, 0.0328830116668852, 0.030841381835560764,
    -0.18703481171909309, -0.027983769416859854, 0.6308807679298589,
    0.7148465705529157, 0.2303778133088965
};

inline constexpr double kDb5[] = {
    0.0033357252854737712, -0.012580751999081999, -0.006241490212798274,
    0.07757149384004572, -0.032244869584638375, -0.24229488706638203,
    0.13842814590132074, 0.7243085284377729, 0.6038292697971896,
    0.16010239797419293
};

inline constexpr double kDb6[] = {
    -0.0010773010853084796, 0.004777257510945511, 0.0005538422011614961,
    -0.03158203931748603, 0.027522865530305727, 0.09750160558732304,
    -0.12976686756726194, -0.22626469396543983, 0.31525035170919763,
    0.7511339080210954, 0.49462389039845306, 0.11154074335010947
};

inline constexpr double kDb7[] = {
    0.00035371379997452024, -0.0018016407040474908, 0.0004295779729213665,
    0.01255099855609984, -0.01657454163066688, -0.03802993693501441,
    0.08061260915108308, 0.07130921926683026, -0.22403618499387498,
    -0.14390600392856498, 0.4697822874051931, 0.7291320908462351,
    0.3965393194819173, 0.07785205408500918
};

inline constexpr double kDb8[] = {
    -0.00011747678412476953, 0.0006754494064505693, -0.00039174037337694705,
    -0.004870352993451574, 0.008746094047405777, 0.013981027917398282,
    -0.044088253930794755, -0.017369301001807547, 0.12874742662047847,
    0.0004724845739132828, -0.2840155429615469, -0.015829105256349306,
    0.5853546836542067, 0.6756307362972898, 0.31287159091429995,
    0.05441584224310401
};

inline constexpr double kDb9[] = {
    3.93473203162716e-05, -0.0002519631889427101, 0.00023038576352319597,
    0.0018476468830562265, -0.00428150368246343, -0.004723204757751397,
    0.022361662123679096, 0.00025094711483145197, -0.06763282906132997,
    0.03072568147933338, 0.14854074933810638, -0.09684078322297646,
    -0.2932737832791749, 0.13319738582500756, 0.6572880780513005,
    0.6048231236901112, 0.24383467461259034, 0.038077947363878345
};

inline constexpr double kDb10[] = {
    -1.3264202894521244e-05, 9.358867032006959e-05, -0.00011646685512928545,
    -0.0006858566949597116, 0.001992405295185056, 0.001395351747052901,
    -0.010733175483330575, 0.0036065535669561697, 0.033212674059341,
    -0.029457536821875813, -0.07139414716639708, 0.09305736460357235,
    0.12736934033579325, -0.19594627437737705, -0.24984642432731538,
    0.2811723436605775, 0.6884590394536035, 0.5272011889317256, 0.1881768000776915,
    0.026670057900555554
};

inline constexpr double kSym2[] = {
    -0.12940952255126037, 0.2241438680420134, 0.8365163037378079,
    0.48296291314453416
};

inline constexpr double kSym3[] = {
    0.03522629188570953, -0.08544127388202666, -0.13501102001025458,
    0.45987750211849154, 0.8068915093110925, 0.33267055295008263
};

inline constexpr double kSym4[] = {
    -0.07576571478950221, -0.029635527646002493, 0.497618667632775,
    0.8037387518051321, 0.29785779560530606, -0.09921954357663353,
    -0.012603967262031304, 0.032223100604051466
};

inline constexpr double kSym5[] = {
    0.027333068344998768, 0.02951949092570626, -0.039134249302313844,
    0.19939753397685558, 0.7234076904040407, 0.633978963456792, 0.01660210576451085,
    -0.17532808990805623, -0.021101834024689042, 0.019538882735249827
};

inline constexpr double kSym6[] = {
    0.015404109327044824, 0.0034907120842221626, -0.11799011114852002,
    -0.04831174258569806, 0.49105594192797375, 0.787641141028651,
    0.3379294217281658, -0.07263752278637658, -0.02106029251237085,
    0.04472490177078139, 0.0017677118642540077, -0.00780070832503238
};

inline constexpr double kSym7[] = {
    0.002681814568260147, -0.001047384888679738, -0.012636303403240567,
    0.030515513165877885, 0.06789269350122057, -0.04955283493704283,
    0.017441255086835708, 0.5361019170905692, 0.7677643170048829,
    0.2886296317506479, -0.14004724044293365, -0.10780823770328972,
    0.0040102448715223955, 0.010268176708464817
};

inline constexpr double kSym8[] = {
    0.001889950332767689, -0.0003029205147241331, -0.014952258337062199,
    0.0038087520138944896, 0.04913717967373029, -0.027219029917103486,
    -0.0519458381078818, 0.36444189483617895, 0.777185751699628, 0.4813596512590534,
    -0.061273359067811076, -0.14329423835127267, 0.007607487324976609,
    0.03169508781152599, -0.0005421323318000107, -0.0033824159510050028
};

inline constexpr double kSym9[] = {
    0.0014009155259146562, 0.0006197808889855071, -0.013271967781817134,
    -0.011528210207679187, 0.030224878858275187, 0.0005834627461249819,
    -0.05456895843083335, 0.23876091460730517, 0.7178970827644124,
    0.6173384491409342, 0.03527248803527104, -0.19155083129728434,
    -0.018233770779395506, 0.062077789302885746, 0.008859267493400267,
    -0.010264064027633121, -0.00047315449868004354, 0.001069490032908612
};

inline constexpr double kSym10[] = {
    0.0007701598091144599, 9.563267072285273e-05, -0.00864129927702215,
    -0.0014653825813046104, 0.04592723923109151, 0.011609893903711319,
    -0.1594942788849106, -0.07088053578323157, 0.4716906669384429,
    0.7695100370210979, 0.3838267610670763, -0.035536740473819585,
    -0.03199005688242811, 0.049994972077375154, 0.00576491203358115,
    -0.02035493981231111, -0.0008043589320164513, 0.004593173585311792,
    5.703608361849501e-05, -0.00045932942100465206
};

inline constexpr double kCoif1[] = {
    -0.015655728135791993, -0.07273261951252645, 0.3848648468648577,
    0.8525720202116004, 0.33789766245748176, -0.07273261951252645
};

inline constexpr double kCoif2[] = {
    -0.000720549445520347, -0.001823208870911032, 0.005611434819368834,
    0.02368017194684777, -0.059434418646431085, -0.07648859907828076,
    0.41700518442323903, 0.8127236354494135, 0.38611006682276283,
    -0.0673725547237256, -0.04146493678687178, 0.01638733646320364
};

inline constexpr double kCoif3[] = {
    -3.4599773197272774e-05, -7.0983302506379e-05, 0.0004662169598204029,
    0.0011175187708306303, -0.002574517688136797, -0.009007976136730624,
    0.015880544863669452, 0.03455502757329773, -0.08230192710629981,
    -0.07179982161915484, 0.42848347637737, 0.7937772226260872, 0.4051769024091182,
    -0.06112339000297254, -0.06577191128146936, 0.023452696142077165,
    0.0077825964256727454, -0.0037935128643808015
};

inline constexpr double kCoif4[] = {
    -1.7849909144933466e-06, -3.2596479400307506e-06, 3.1229861599195265e-05,
    6.233885431278718e-05, -0.0002599743371222568, -0.0005890202246332164,
    0.0012665610789256603, 0.003751434697146086, -0.0056582838001308835,
    -0.015211728187697211, 0.025082253337949608, 0.03933442260558915,
    -0.09622042453595264, -0.06662747236681715, 0.43438603311435653,
    0.7822389344242826, 0.41530842700068227, -0.05607731960356926,
    -0.08126671024919373, 0.026682304669604834, 0.016068947131575025,
    -0.00734616793626805, -0.0016294924252267858, 0.000892313902537003
};

inline constexpr double kCoif5[] = {
    -9.604010112767892e-08, -1.6237995172048335e-07, 2.0612203985788783e-06,
    3.7007277113394796e-06, -2.1270221672515614e-05, -4.12198619242655e-05,
    0.00014035632812373243, 0.00030185794166824473, -0.0006375589261258812,
    -0.0016616273039298788, 0.0024315754425382886, 0.006761520220620417,
    -0.009159507338676163, -0.019758391600965465, 0.03267479946705735,
    0.041287530472117834, -0.10556315130733723, -0.06203775157498195,
    0.4379823066591633, 0.7742936228603274, 0.42157126673075435,
    -0.05204667025355476, -0.09192158806008609, 0.028169744270532353,
    0.023408322118927783, -0.010131584846900275, -0.004159312627578639,
    0.0021782943778456947, 0.0003585777411617577, -0.000212081862067494
};

struct FilterTableEntry {
    std::string_view name;
    std::span<const double> dec_lo;
};

inline constexpr FilterTableEntry kFilterTable[] = {
    {"haar", kHaar},
    {"db2", kDb2},
    {"db3", kDb3},
    {"db4", kDb4},
    {"db5", kDb5},
    {"db6", kDb6},
    {"db7", kDb7},
    {"db8", kDb8},
    {"db9", kDb9},
    {"db10", kDb10},
    {"sym2", kSym2},
    {"sym3", kSym3},
    {"sym4", kSym4},
    {"sym5", kSym5},
    {"sym6", kSym6},
    {"sym7", kSym7},
    {"sym8", kSym8},
    {"sym9", kSym9},
    {"sym10", kSym10},
    {"coif1", kCoif1},
    {"coif2", kCoif2},
    {"coif3", kCoif3},
    {"coif4", kCoif4},
    {"coif5", kCoif5},
};

inline constexpr std::size_t kFilterCount = sizeof(kFilterTable) / sizeof(kFilterTable[0]);

}  // namespace wavembed::detail

#endif  // WAVEMBED_DETAIL_WAVELET_TABLES_HPP
