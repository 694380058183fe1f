// Generated by gen_stats_reference.py -- do not edit by hand.
#pragma once
#include <vector>

namespace statsref {

struct PairedTCase {
  std::vector<double> x, y;
  double t, p;
  int df;
};

inline const std::vector<PairedTCase> paired_t_cases = {
  {{17.7852, 19.8671, 18.8091, 15.2454, 12.0889, 22.7703, 17.4044, 11.5369, 13.1627, 18.5979, 20.3169, 16.7915},
   {20.3197, 20.0328, 17.6279, 15.824, 11.0366, 23.3515, 19.2831, 11.9887, 14.8913, 18.4475, 21.7087, 16.6057},
   -1.6917380085781986, 0.11879577650891356, 11},
  {{24.5081, 21.328, 16.9939, 16.4351, 19.783, 21.5651, 13.3012, 17.5901, 13.0876, 16.0764},
   {26.3733, 22.0383, 18.3609, 15.9671, 19.4507, 23.5658, 12.8929, 18.5874, 14.8398, 15.3016},
   -1.9628990818889362, 0.08126481310619373, 9},
  {{25.9964, 20.4984, 23.4206, 14.1848, 19.4258, 21.4271, 18.3379},
   {25.9728, 20.849, 23.7404, 14.2974, 20.3964, 22.8967, 17.4002},
   -1.1211754576981374, 0.30507071566277927, 6},
  {{23.7864, 13.5597, 17.0394, 20.6634, 19.6248, 22.5052, 23.3616, 20.5909, 16.6835, 28.8407, 17.8727, 22.8734, 19.2791, 20.9932},
   {22.6759, 13.5747, 19.1865, 20.1509, 19.4574, 24.2141, 23.5859, 20.9566, 16.8471, 30.1431, 19.0999, 24.3945, 20.2017, 21.4505},
   -2.405381436986562, 0.03176336829579107, 13},
  {{17.0614, 23.9993, 16.5732, 18.9405, 16.0494, 15.4509, 17.0273, 15.0481, 22.5925, 16.3212, 22.444},
   {17.3679, 25.1715, 17.2966, 18.1456, 16.7384, 13.1514, 16.2941, 14.7984, 23.4361, 16.3901, 24.4678},
   -0.453826787858498, 0.6596434436391745, 10},
  {{20.4475, 24.9481, 20.8741, 16.6793, 21.8055, 10.7815, 13.7762, 13.6128, 21.4181, 22.8257},
   {21.1395, 27.7201, 20.2062, 14.646, 21.5061, 12.677, 17.6895, 13.3185, 21.6102, 23.3547},
   -1.2084845391043884, 0.2576534492817186, 9},
  {{19.8791, 23.4375, 17.1448, 19.6169, 27.2264, 18.1564, 15.1678, 20.9558, 12.875, 20.3176, 20.2789, 21.314, 26.0556, 22.7481},
   {18.8114, 22.7157, 16.5069, 20.2364, 26.8525, 18.6652, 16.8435, 21.1857, 12.5447, 21.0599, 22.7215, 23.0077, 24.4532, 21.1876},
   -0.3484431148226678, 0.73308556269734, 13},
  {{12.9219, 12.6278, 15.3605, 15.9432, 20.1618, 17.266, 24.9663, 15.9515, 18.6815, 8.839, 13.1898, 26.072, 21.3935, 15.8678},
   {13.434, 11.7546, 14.2488, 15.0789, 20.2942, 18.8314, 23.9519, 16.1595, 17.7001, 9.5112, 14.9481, 23.9482, 22.227, 15.601},
   0.37245524470823116, 0.7155554053540083, 13},
  {{11.8469, 20.6654, 25.9551, 12.2648, 11.0154, 16.7505, 18.6572, 13.102, 19.9796, 12.6515, 17.798},
   {12.0813, 19.1275, 27.0974, 12.2155, 12.4303, 17.6184, 19.1591, 11.9638, 21.0096, 12.6252, 17.9119},
   -0.8345416940484967, 0.4234639784406664, 10},
  {{17.1613, 23.6492, 26.5258, 23.3373, 19.5842, 19.5849, 23.6566, 11.8894, 8.9471, 18.8802, 18.2536, 12.5781, 20.2733, 19.9235},
   {16.5739, 23.0658, 22.595, 23.1843, 23.2325, 18.6139, 25.2688, 10.8706, 11.2519, 20.6105, 17.7399, 12.4166, 21.0271, 19.4544},
   -0.24337125995682315, 0.8115159669707194, 13},
  {{18.4603, 24.2411, 19.4795, 20.733, 18.9902, 18.8294, 15.9388, 15.7036, 13.7836, 12.1054},
   {19.6159, 22.6026, 18.5246, 22.0035, 21.7076, 21.2386, 16.3821, 15.828, 14.0208, 12.4431},
   -1.4297147846156446, 0.1865800938206378, 9},
  {{16.0826, 14.5469, 20.483, 20.1895, 23.0233, 16.5611, 15.409, 15.528, 21.3551, 20.8501, 23.1457, 21.1896, 20.5486},
   {17.9212, 14.7067, 19.6654, 20.9263, 22.9356, 16.5217, 14.1534, 17.8239, 23.44, 20.5214, 23.7175, 22.6517, 21.7307},
   -1.9287827783201394, 0.07774581213617915, 12},
  {{17.1291, 14.8491, 18.5275, 21.6228, 12.2569, 18.021, 21.5696, 12.0906, 14.3827, 20.0026, 19.0435},
   {16.1286, 15.3025, 19.4473, 21.3674, 10.9872, 17.2426, 22.391, 11.1799, 12.7222, 17.8622, 18.1612},
   2.0341769763739705, 0.0693189927884958, 10},
  {{27.085, 13.3476, 18.4681, 16.5558, 23.5249, 20.9919, 17.6542, 19.3328, 19.7347},
   {27.9457, 13.9842, 18.2761, 16.0294, 23.5737, 20.4767, 17.6509, 19.7278, 19.1556},
   -0.07920454184597549, 0.9388153227293395, 8},
  {{19.5517, 12.2835, 13.4362, 21.7001, 25.0978, 19.9497, 20.1203, 20.8774, 20.6254, 17.4765, 19.3968, 14.5722, 15.723},
   {18.5014, 12.5409, 13.7156, 22.6991, 25.6603, 20.1226, 21.8359, 21.3885, 18.7364, 17.2256, 19.3774, 14.6717, 15.6615},
   -0.4177079854398663, 0.6835375110294127, 12},
  {{21.831, 12.9385, 16.5866, 22.0396, 26.432, 23.3412, 17.2033, 15.6888},
   {23.3112, 10.9522, 17.2097, 23.2518, 27.5405, 23.8794, 15.2531, 14.3862},
   0.06687111437545318, 0.9485542001813978, 7},
  {{16.4271, 19.3082, 25.4234, 22.3444, 13.0439, 19.587, 16.1181, 17.4597, 21.4613, 21.0039, 17.6371},
   {18.928, 19.0009, 26.1215, 23.3658, 15.1407, 19.2241, 14.5411, 17.4991, 22.2663, 21.8147, 16.2902},
   -1.0348399775113013, 0.32512049377523555, 10},
  {{16.007, 13.7305, 12.7877, 11.6314, 15.7532, 21.3011, 23.2896, 9.0717, 14.4119, 19.4294, 19.2809, 28.4949, 16.6969, 17.2732},
   {14.5202, 15.5609, 12.1528, 12.1443, 15.3579, 20.895, 21.7589, 10.0703, 16.1998, 21.2261, 20.6337, 28.1308, 16.4792, 17.3179},
   -0.7563419408735315, 0.4629310122445127, 13},
  {{18.4153, 13.9176, 18.1724, 18.3661, 10.6395, 18.7555, 21.1854, 19.2601, 18.2364, 24.853},
   {17.9591, 12.0433, 17.2114, 17.0046, 10.5581, 18.2304, 21.814, 20.6778, 17.453, 25.1655},
   1.1959933526176618, 0.26225705279764877, 9},
  {{17.2026, 19.5864, 18.1773, 12.4534, 20.785, 16.9925, 19.1851, 18.5596, 20.9981, 22.8249},
   {18.1508, 20.7557, 19.6585, 12.351, 20.3051, 18.952, 17.9141, 16.5066, 20.2243, 24.4209},
   -0.5708643378079841, 0.5820629194072973, 9},
};

struct AnovaCase {
  std::vector<std::vector<double>> groups;
  double f, p;
  int df1, df2;
};

inline const std::vector<AnovaCase> anova_cases = {
  {{{0.6615, 2.0465, 0.3281, 1.0116, 2.095, 1.0123, 2.6715},
    {1.671, 1.7372, 0.6209, 0.1205, 0.5613, 1.9746, 0.742, 0.796},
    {1.7615, 0.0397, 0.5855, 0.069, 0.8544, 0.3879},
    {2.356, 1.4602, 2.5193, 1.2592, 0.5623, 1.8227, 0.4846, 1.2404, 0.1994}},
   1.4536764262178012, 0.25014378008421584, 3, 26},
  {{{1.0818, 2.5498, 0.7665, 1.3601},
    {-0.2473, -0.2257, -0.0362, 0.7255, 1.2294, -0.6047},
    {2.1782, 1.2557, 0.29, 2.0928},
    {0.5652, 0.3406, 0.7574, 0.4905, 0.5872},
    {0.1724, 1.3452, 2.0024, 1.0755, 1.8287, 1.6646, 0.9265, 0.1842}},
   3.8091825117348814, 0.016842534014232025, 4, 22},
  {{{0.261, 0.5205, -0.0633, 1.4771, 0.3858, -0.119, -0.6324, 1.2334},
    {1.9456, 0.6948, 1.3868, 0.3974, 2.0303, -0.0682, 1.2991, -0.3444}},
   1.783201086161685, 0.2030634997282206, 1, 14},
  {{{1.7901, 0.3709, 0.7428, 0.2891, 2.3626, 0.0236},
    {0.6158, 3.0667, 0.8983, 1.2907, 1.3159, 0.2092},
    {1.111, -0.671, 2.5957, 2.4793, 1.9748},
    {0.3421, 2.9815, -0.7236, 1.7757, 2.164, 2.0579, 1.8698, 0.7307},
    {-0.7319, 0.806, 1.4554, 0.4258, 1.6955}},
   0.475298951439713, 0.7534449922798414, 4, 25},
  {{{0.2027, 0.3488, 0.5744, -1.262, 1.5981, 0.6648},
    {0.4457, 1.2459, -0.605, 0.3897, -0.4555, -0.0242}},
   0.160342409769812, 0.6972623611258855, 1, 10},
  {{{0.655, 1.1693, 1.5032, 0.4436, 0.5853, 1.0137, 0.4085, 0.2128},
    {1.3685, 0.6956, 1.5437, 2.6048, 1.2235, 1.5852, 0.3728},
    {0.914, 0.9149, 0.8448, 0.617},
    {3.1112, 2.3491, 0.8714, -0.2244, 0.4502, 2.2497, -0.071},
    {0.9298, 0.4356, 0.3572, -0.2967, 0.3834, 1.5192}},
   1.2185707415832687, 0.32607495384444296, 4, 27},
  {{{0.4833, 0.9707, 0.0907, -0.3797, -0.4041, 0.58},
    {0.2244, 1.9075, 2.0477, -0.0505, 1.8467, 1.4243},
    {0.134, 0.2215, -0.2552, 0.603, -0.1729, 0.6613, 0.8992, -0.3686, 1.2775},
    {2.2151, 1.2701, 2.183, 2.5349, 1.7333, 0.7157, 0.9934, 1.2091},
    {1.819, -0.0719, 0.6002, 0.578, 0.118}},
   5.63939707642086, 0.0017476934280911578, 4, 29},
  {{{0.5242, 0.6892, 2.5757, 0.8553, 2.1627, -0.9686, 0.4617, 0.5209},
    {0.1351, 1.6957, 1.6538, 1.4916, 1.9068},
    {0.483, 1.1179, 0.883, 0.8633},
    {0.4729, 1.3218, 1.5874, 1.2666, 0.9541, -0.0487, 1.2031}},
   0.5291071353048409, 0.6674323539030713, 3, 20},
  {{{0.799, 0.1772, 0.2702, 1.498, 0.5442, 0.2041},
    {1.3005, 1.4196, 1.1779, 0.7874, 0.0355, 1.401, -0.4379, 0.17}},
   0.18774862382303634, 0.6724835166195937, 1, 12},
  {{{0.2184, 1.4354, 2.1059, 0.7082, 0.2777, 1.5568, -1.1528, -0.0686},
    {0.9814, -0.113, -0.2345, 1.7118, 0.8701, 1.0861, 0.1032, -0.3441, 0.9423},
    {0.3891, 1.026, 0.3661, 0.8567, -0.7186, -0.0449},
    {1.6247, 1.4781, 1.9108, 1.2063, 0.6118, 2.2087, 1.5119, 0.801, 1.7453}},
   3.5474097937319202, 0.02706035427843209, 3, 28},
  {{{2.0091, 0.9458, 0.8212, 0.3607, 1.0925, 1.3404, 1.158, 2.557, 0.8301},
    {1.6568, 1.1858, 1.3611, 1.4268, 1.686, 1.6256, 1.6504, 0.8681},
    {-0.2, 1.4485, 0.7268, 2.5419, 1.3729, 2.31, -0.3722, 0.9734, 0.4978},
    {0.9215, 0.9812, 1.0407, 0.2929, 0.2711, 0.1532, 0.644, 0.8154, -0.0797},
    {0.7159, 0.5736, 0.4464, 1.0622}},
   2.525682919992023, 0.058737188094907467, 4, 34},
  {{{0.1717, 1.4288, 2.2081, -0.337, 0.0953},
    {1.9097, 1.8949, 2.3473, 1.0035, 0.6122, 1.471, 2.4049, 2.0561, 1.1781},
    {0.5699, 1.0645, 0.9403, 1.9376, 1.5225, 1.0145}},
   2.8290703718168273, 0.08697802371229231, 2, 17},
  {{{1.4802, -0.9907, -1.2636, -0.3748, 1.1188, -0.1985, 0.2234, -0.3737, 1.4885},
    {-0.4309, -0.0487, 1.6114, -0.0004, -0.9402, -0.1413, -0.4812},
    {2.3441, 0.8427, 1.628, 1.0773, 0.8354, 0.2614, 0.8566},
    {0.7371, 1.3767, 1.7191, 0.5575},
    {0.0544, 0.1914, -1.1207, 1.3437, 0.4133}},
   2.8230361832412565, 0.0445403044208174, 4, 27},
  {{{-0.2197, 0.1112, 1.344, 0.5615, 1.2494},
    {0.2393, 2.1727, 1.1889, -0.445, 0.9195}},
   0.14604092201550598, 0.712299671053809, 1, 8},
  {{{0.0422, 1.5675, 0.5406, 0.8446, 1.5495, 1.4494, 0.5751, -0.204},
    {0.2043, 0.7182, 1.1778, 0.2411, 0.1485},
    {1.1739, 1.5773, 0.5005, -0.1147, 2.0777, 1.5285, 0.1856, 1.9779, 0.7903}},
   1.1738962568652895, 0.3306023715327453, 2, 19},
  {{{0.1881, 1.0931, 1.333, 1.0071, 1.8155, 0.7615, -0.0472, 0.3517, 0.1867},
    {1.4732, 1.2918, 0.8197, 2.2238, 2.064},
    {2.3459, 1.6983, 0.2755, 2.2838, 1.4109, 2.0028, 1.6477, 2.6167, 1.0116}},
   5.296375639838903, 0.014259838198727276, 2, 20},
  {{{1.7006, 0.8515, 1.7855, 0.4837, 0.807, 0.944, 0.7781, 1.1397, 1.9428},
    {1.6074, 1.4756, 1.8934, 2.1596, 2.0949}},
   7.214725189856961, 0.019815000553479727, 1, 12},
  {{{1.3681, 2.3302, 1.0025, 0.7799, 1.3021},
    {0.3198, 2.0282, 1.7675, 1.9476, 1.4787}},
   0.13745494299487387, 0.7204492570387727, 1, 8},
  {{{1.4755, 2.2148, 1.3461, 1.5194, 1.5157, 1.0263},
    {2.1413, -0.0493, 0.7733, 0.1486, 0.2119, 1.6158, 0.912, 1.8681},
    {0.7112, -0.093, 1.1146, 1.6232, 2.243},
    {1.97, 2.9072, 0.8249, 1.9894}},
   1.701335672408382, 0.20056703452195648, 3, 19},
  {{{1.1666, -1.2444, 0.0587, 0.6241, 1.0623},
    {0.823, 1.3678, 1.2155, 1.0558, 1.3561},
    {-0.4409, 0.0195, 0.1055, 0.5198, 1.2063}},
   2.6151349406199142, 0.1141129667915114, 2, 12},
};

struct TTailProbe { double t; int df; double p_two_sided; };
inline const std::vector<TTailProbe> t_tail_probes = {
  {0.0, 1, 1.0},
  {0.0, 2, 1.0},
  {0.0, 4, 1.0},
  {0.0, 9, 1.0},
  {0.0, 14, 1.0},
  {0.0, 29, 1.0},
  {0.0, 120, 1.0},
  {0.5, 1, 0.7048327646991335},
  {0.5, 2, 0.6666666666666666},
  {0.5, 4, 0.6433299631818633},
  {0.5, 9, 0.6290712998260265},
  {0.5, 14, 0.6248419162396948},
  {0.5, 29, 0.6208480841937813},
  {0.5, 120, 0.6179907243383971},
  {1.0, 1, 0.5},
  {1.0, 2, 0.4226497308103742},
  {1.0, 4, 0.37390096630005887},
  {1.0, 9, 0.3434363961379135},
  {1.0, 14, 0.3342819433946576},
  {1.0, 29, 0.32558198801619354},
  {1.0, 120, 0.31932272386442123},
  {1.96, 1, 0.3003428917760331},
  {1.96, 2, 0.18905730960173228},
  {1.96, 4, 0.12155463985018357},
  {1.96, 9, 0.08164440546041664},
  {1.96, 14, 0.07021027194833963},
  {1.96, 29, 0.059667795519591324},
  {1.96, 120, 0.05231367644582755},
  {2.5, 1, 0.2422378831816868},
  {2.5, 2, 0.1296117202215108},
  {2.5, 4, 0.06676654481198814},
  {2.5, 9, 0.03386182768298574},
  {2.5, 14, 0.025466664614062183},
  {2.5, 29, 0.018325344338426076},
  {2.5, 120, 0.013769534925030424},
  {3.2, 1, 0.19282249595845913},
  {3.2, 2, 0.08534087923995286},
  {3.2, 4, 0.03290081060093898},
  {3.2, 9, 0.010831302589901328},
  {3.2, 14, 0.006420541165424647},
  {3.2, 29, 0.003318442463481748},
  {3.2, 120, 0.0017585699238893057},
  {4.8, 1, 0.1307587659113405},
  {4.8, 2, 0.040767079627082155},
  {4.8, 4, 0.008648156577150661},
  {4.8, 9, 0.0009737199774594324},
  {4.8, 14, 0.00028256466716974785},
  {4.8, 29, 4.421765587454818e-05},
  {4.8, 120, 4.6179281501262716e-06},
  {-1.3, 1, 0.41742880032030544},
  {-1.3, 2, 0.32324703181604036},
  {-1.3, 4, 0.2634515964712241},
  {-1.3, 9, 0.22590637267304944},
  {-1.3, 14, 0.2145975925619359},
  {-1.3, 29, 0.20383918366202974},
  {-1.3, 120, 0.19609247775908634},
  {-2.77, 1, 0.2205570150142183},
  {-2.77, 2, 0.10936159138109533},
  {-2.77, 4, 0.05033100552256326},
  {-2.77, 9, 0.021753508439209413},
  {-2.77, 14, 0.01504221495699176},
  {-2.77, 29, 0.00967663987416673},
  {-2.77, 120, 0.006497748030023476},
  {7.5, 1, 0.08438492631768273},
  {7.5, 2, 0.017317326879372444},
  {7.5, 4, 0.0016908715323222976},
  {7.5, 9, 3.6927412616587837e-05},
  {7.5, 14, 2.878860069932224e-06},
  {7.5, 29, 2.8841891530650557e-08},
  {7.5, 120, 1.2169766349206583e-11},
};

struct FTailProbe { double f; int df1, df2; double p_upper; };
inline const std::vector<FTailProbe> f_tail_probes = {
  {0.0, 1, 4, 1.0},
  {0.0, 2, 10, 1.0},
  {0.0, 3, 21, 1.0},
  {0.0, 5, 40, 1.0},
  {0.0, 2, 12, 1.0},
  {0.0, 4, 8, 1.0},
  {0.2, 1, 4, 0.6778688286992494},
  {0.2, 2, 10, 0.8219271067593518},
  {0.2, 3, 21, 0.8952024191454792},
  {0.2, 5, 40, 0.9605947837405591},
  {0.2, 2, 12, 0.8214050438400379},
  {0.2, 4, 8, 0.9313819845887328},
  {1.0, 1, 4, 0.37390096630005887},
  {1.0, 2, 10, 0.4018775720164609},
  {1.0, 3, 21, 0.41228467762388177},
  {1.0, 5, 40, 0.4302282293926574},
  {1.0, 2, 12, 0.39656945660396603},
  {1.0, 4, 8, 0.4609053497942387},
  {2.5, 1, 4, 0.18900365845517547},
  {2.5, 2, 10, 0.13168724279835392},
  {2.5, 3, 21, 0.08736945343994482},
  {2.5, 5, 40, 0.046276763968031494},
  {2.5, 2, 12, 0.1237069068554501},
  {2.5, 4, 8, 0.12572609188978645},
  {3.9, 1, 4, 0.11950506678326306},
  {3.9, 2, 10, 0.05596287125058507},
  {3.9, 3, 21, 0.023236847369177194},
  {3.9, 5, 40, 0.00566660731880266},
  {3.9, 2, 12, 0.04955601032022189},
  {3.9, 4, 8, 0.04811698252264888},
  {6.0, 1, 4, 0.07048399691021995},
  {6.0, 2, 10, 0.0194037913455986},
  {6.0, 3, 21, 0.004054423701144442},
  {6.0, 5, 40, 0.00031276755495857896},
  {6.0, 2, 12, 0.015625},
  {6.0, 4, 8, 0.015625},
  {11.0, 1, 4, 0.029471316278634696},
  {11.0, 2, 10, 0.0029802322387695312},
  {11.0, 3, 21, 0.00014992953910313486},
  {11.0, 5, 40, 1.0479889154799514e-06},
  {11.0, 2, 12, 0.0019329204196164079},
  {11.0, 4, 8, 0.002456281158007288},
};

struct BetaProbe { double a, b, x, value; };
inline const std::vector<BetaProbe> beta_probes = {
  {0.5, 0.5, 0.001, 0.020135041633377492},
  {0.5, 0.5, 0.1, 0.20483276469913345},
  {0.5, 0.5, 0.3, 0.36901011956554536},
  {0.5, 0.5, 0.5, 0.5},
  {0.5, 0.5, 0.7, 0.6309898804344546},
  {0.5, 0.5, 0.9, 0.7951672353008665},
  {0.5, 0.5, 0.999, 0.9798649583666225},
  {1.0, 3.0, 0.001, 0.002997001},
  {1.0, 3.0, 0.1, 0.271},
  {1.0, 3.0, 0.3, 0.657},
  {1.0, 3.0, 0.5, 0.875},
  {1.0, 3.0, 0.7, 0.973},
  {1.0, 3.0, 0.9, 0.999},
  {1.0, 3.0, 0.999, 0.999999999},
  {2.5, 1.5, 0.001, 6.439837937838534e-08},
  {2.5, 1.5, 0.1, 0.006207395720448074},
  {2.5, 1.5, 0.3, 0.0889437231706656},
  {2.5, 1.5, 0.5, 0.2877934092108062},
  {2.5, 1.5, 0.7, 0.5843121477019746},
  {2.5, 1.5, 0.9, 0.9021193570586202},
  {2.5, 1.5, 0.999, 0.9998927276290064},
  {7.0, 7.0, 0.001, 1.7070109959923742e-18},
  {7.0, 7.0, 0.1, 9.928548640000004e-05},
  {7.0, 7.0, 0.3, 0.06237521179919999},
  {7.0, 7.0, 0.5, 0.5},
  {7.0, 7.0, 0.7, 0.9376247882008},
  {7.0, 7.0, 0.9, 0.9999007145136},
  {7.0, 7.0, 0.999, 1.0},
  {0.5, 14.5, 0.001, 0.1341048514541191},
  {0.5, 14.5, 0.1, 0.9169253344855709},
  {0.5, 14.5, 0.3, 0.9985741725820975},
  {0.5, 14.5, 0.5, 0.9999913005245517},
  {0.5, 14.5, 0.7, 0.9999999954617879},
  {0.5, 14.5, 0.9, 0.9999999999999996},
  {0.5, 14.5, 0.999, 1.0},
  {30.0, 2.0, 0.001, 3.097000000000002e-89},
  {30.0, 2.0, 0.1, 2.8000000000000047e-29},
  {30.0, 2.0, 0.3, 4.529604906082273e-15},
  {30.0, 2.0, 0.5, 1.4901161193847656e-08},
  {30.0, 2.0, 0.7, 0.00022539340290692218},
  {30.0, 2.0, 0.9, 0.16956463310086492},
  {30.0, 2.0, 0.999, 0.9995438962809783},
  {60.0, 60.0, 0.001, 4.5582550753317245e-146},
  {60.0, 60.0, 0.1, 1.0801759461625987e-28},
  {60.0, 60.0, 0.3, 2.500794677693504e-06},
  {60.0, 60.0, 0.5, 0.5},
  {60.0, 60.0, 0.7, 0.9999974992053223},
  {60.0, 60.0, 0.9, 1.0},
  {60.0, 60.0, 0.999, 1.0},
};

struct ShapiroCase { std::vector<double> x; double w, p; };
inline const std::vector<ShapiroCase> shapiro_cases = {
  {{-0.9131, 0.7945, -1.0669, 2.1929, -0.9107, -1.3859, -0.7003, 1.0142, -0.3013, -0.9683, -0.4317, -0.2592},
   0.8536505705055397, 0.040739492721342974},
  {{21.4124, 21.8369, 15.5215, 19.7255, 17.2048, 23.1429, 21.03, 23.6607, 23.1174, 16.4626, 21.8224, 17.0369, 20.4473, 19.8284, 19.9264, 22.6504, 19.6754, 23.7552, 27.9225, 18.4797, 19.9114, 20.1248, 20.0764, 17.5423},
   0.963769522827065, 0.5186822595103258},
  {{3.6279, 1.0665, 0.7345, 1.6702, 0.2333, 0.2403, 2.603, 0.4671, 0.0173, 4.2567, 0.0799, 0.078, 2.3256, 0.3332, 0.6255, 0.8997, 0.4374, 1.329, 0.3384, 0.0754},
   0.7966144855611232, 0.0007694789831265591},
  {{0.0519, 0.3974, 0.944, 0.6902, 0.2704, 0.699, 0.026, 0.5684, 0.1569, 0.3243, 0.4766, 0.0898, 0.7408, 0.6906, 0.9221},
   0.9364109996350954, 0.33937777560871285},
  {{5.7909, 5.2371, 4.8455, 4.591, 4.8587, 4.1122, 4.7636, 4.2859},
   0.9549631663253662, 0.7609892987963138},
};

}  // namespace statsref
