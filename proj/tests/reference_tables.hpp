#pragma once
// Reference values for n = 1..10 (-1 = not given).  The n = 10 genus-0
// figures come from sampling and are only printed, never asserted.
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace fixtures {

struct TableRow {
  const char* kind;
  int genus;  // -1 = all genera
  std::array<std::int64_t, 10> value;
};

// spherical curves
inline const std::vector<TableRow> kSpherical = {
    {"OO", 0, {1, 3, 9, 37, 182, 1143, 7553, 54559, 412306, 3251240}},
    {"UO", 0, {1, 2, 6, 21, 99, 588, 3829, 27404, 206543, 1626638}},
    {"OU", 0, {1, 2, 6, 21, 97, 579, 3812, 27328, 206410, 1625916}},
    {"UU", 0, {1, 2, 6, 19, 76, 376, 2194, 14614, 106421, 823832}},
    {"UOc", 0, {2, 3, 12, 37, 198, 1143, 7658, 54559, 413086, 3251240}},
};
// spherical curves without a simple loop
inline const std::vector<TableRow> kKinkFree = {
    {"OO", 0, {0, 0, 1, 1, 2, 9, 29, 133, 594, 2864}},
    {"UO", 0, {0, 0, 1, 1, 2, 6, 19, 74, 320, 1469}},
    {"OU", 0, {0, 0, 1, 1, 2, 5, 18, 70, 313, 1440}},
    {"UU", 0, {0, 0, 1, 1, 2, 5, 16, 52, 205, 863}},
    {"UOc", 0, {0, 0, 2, 1, 4, 9, 38, 133, 640, 2864}},
};
// irreducible and indecomposable spherical curves
inline const std::vector<TableRow> kPrime = {
    {"OO", 0, {0, 0, 1, 1, 2, 6, 17, 73, 290, 1274}},
    {"UO", 0, {0, 0, 1, 1, 2, 4, 12, 41, 161, 658}},
    {"OU", 0, {0, 0, 1, 1, 2, 3, 11, 38, 156, 638}},
    {"UU", 0, {0, 0, 1, 1, 2, 3, 10, 27, 101, 364}},
    {"UOc", 0, {0, 0, 2, 1, 4, 6, 24, 73, 322, 1274}},
};
// general immersions by genus
inline const std::vector<TableRow> kGeneral = {
    {"OO", -1, {1, 4, 22, 218, 3028, 55540, 1235526, 32434108, 980179566, 33522177088}},
    {"OO", 0, {1, 3, 9, 37, 182, 1143, 7553, 54559, 412306, 3251240}},
    {"OO", 1, {0, 1, 11, 113, 1102, 11114, 112846, 1160532, 12038974, -1}},
    {"OO", 2, {0, 0, 2, 68, 1528, 28947, 491767, 7798139, 117668914, -1}},
    {"OO", 3, {0, 0, 0, 0, 216, 14336, 554096, 16354210, 407921820, -1}},
    {"OO", 4, {0, 0, 0, 0, 0, 0, 69264, 7066668, 397094352, -1}},
    {"OO", 5, {0, 0, 0, 0, 0, 0, 0, 0, 45043200, -1}},
    {"UO", -1, {1, 3, 13, 121, 1538, 28010, 618243, 16223774, 490103223, 16761330464}},
    {"UO", 0, {1, 2, 6, 21, 99, 588, 3829, 27404, 206543, 1626638}},
    {"UO", 1, {0, 1, 6, 64, 559, 5656, 56528, 581511, 6020787, -1}},
    {"UO", 2, {0, 0, 1, 36, 772, 14544, 246092, 3900698, 58838383, -1}},
    {"UO", 3, {0, 0, 0, 0, 108, 7222, 277114, 8180123, 203964446, -1}},
    {"UO", 4, {0, 0, 0, 0, 0, 0, 34680, 3534038, 198551464, -1}},
    {"UO", 5, {0, 0, 0, 0, 0, 0, 0, 0, 22521600, -1}},
    {"OU", -1, {1, 3, 14, 120, 1556, 27974, 618824, 16223180, 490127050, 16761331644}},
    {"OU", 0, {1, 2, 6, 21, 97, 579, 3812, 27328, 206410, 1625916}},
    {"OU", 1, {0, 1, 6, 62, 559, 5614, 56526, 580860, 6020736, -1}},
    {"OU", 2, {0, 0, 2, 37, 788, 14558, 246331, 3900740, 58842028, -1}},
    {"OU", 3, {0, 0, 0, 0, 112, 7223, 277407, 8179658, 203974134, -1}},
    {"OU", 4, {0, 0, 0, 0, 0, 0, 34748, 3534594, 198559566, -1}},
    {"OU", 5, {0, 0, 0, 0, 0, 0, 0, 0, 22524176, -1}},
    {"UU", -1, {1, 3, 12, 86, 894, 14715, 313364, 8139398, 245237925, 8382002270}},
    {"UU", 0, {1, 2, 6, 19, 76, 376, 2194, 14614, 106421, 823832}},
    {"UU", 1, {0, 1, 5, 45, 335, 3101, 29415, 295859, 3031458, -1}},
    {"UU", 2, {0, 0, 1, 22, 427, 7557, 124919, 1961246, 29479410, -1}},
    {"UU", 3, {0, 0, 0, 0, 56, 3681, 139438, 4098975, 102054037, -1}},
    {"UU", 4, {0, 0, 0, 0, 0, 0, 17398, 1768704, 99304511, -1}},
    {"UU", 5, {0, 0, 0, 0, 0, 0, 0, 0, 11262088, -1}},
};
// bicolourable immersions by genus
inline const std::vector<TableRow> kBicolourable = {
    {"OOc", -1, {2, 6, 20, 108, 776, 7772, 92172, 1291048, 20644140, -1}},
    {"OOc", 0, {2, 6, 18, 74, 364, 2286, 15106, 109118, 824612, 6502480}},
    {"OOc", 1, {0, 0, 2, 32, 340, 3780, 40612, 436368, 4675012, -1}},
    {"OOc", 2, {0, 0, 0, 2, 72, 1630, 31510, 549334, 8883620, -1}},
    {"OOc", 3, {0, 0, 0, 0, 0, 76, 4944, 188356, 5508120, -1}},
    {"OOc", 4, {0, 0, 0, 0, 0, 0, 0, 7872, 752776, -1}},
    {"OOb", -1, {1, 3, 10, 54, 388, 3886, 46086, 645524, 10322070, -1}},
    {"OOb", 0, {1, 3, 9, 37, 182, 1143, 7553, 54559, 412306, 3251240}},
    {"OOb", 1, {0, 0, 1, 16, 170, 1890, 20306, 218184, 2337506, -1}},
    {"OOb", 2, {0, 0, 0, 1, 36, 815, 15755, 274667, 4441810, -1}},
    {"OOb", 3, {0, 0, 0, 0, 0, 38, 2472, 94178, 2754060, -1}},
    {"OOb", 4, {0, 0, 0, 0, 0, 0, 0, 3936, 376388, -1}},
    {"UOc", -1, {2, 3, 14, 54, 420, 3886, 46470, 645524, 10328214, -1}},
    {"UOc", 0, {2, 3, 12, 37, 198, 1143, 7658, 54559, 413086, 3251240}},
    {"UOc", 1, {0, 0, 2, 16, 186, 1890, 20516, 218184, 2340106, -1}},
    {"UOc", 2, {0, 0, 0, 1, 36, 815, 15812, 274667, 4443518, -1}},
    {"UOc", 3, {0, 0, 0, 0, 0, 38, 2484, 94178, 2754988, -1}},
    {"UOc", 4, {0, 0, 0, 0, 0, 0, 0, 3936, 376516, -1}},
    {"UOb", -1, {1, 2, 7, 30, 210, 1973, 23235, 323182, 5164107, -1}},
    {"UOb", 0, {1, 2, 6, 21, 99, 588, 3829, 27404, 206543, 1626638}},
    {"UOb", 1, {0, 0, 1, 8, 93, 945, 10258, 109092, 1170053, -1}},
    {"UOb", 2, {0, 0, 0, 1, 18, 421, 7906, 137585, 2221759, -1}},
    {"UOb", 3, {0, 0, 0, 0, 0, 19, 1242, 47089, 1377494, -1}},
    {"UOb", 4, {0, 0, 0, 0, 0, 0, 0, 2012, 188258, -1}},
    {"OUc", -1, {1, 4, 10, 60, 388, 3920, 46086, 645928, 10322070, -1}},
    {"OUc", 0, {1, 4, 9, 42, 182, 1158, 7553, 54656, 412306, 3251832}},
    {"OUc", 1, {0, 0, 1, 16, 170, 1890, 20306, 218184, 2337506, -1}},
    {"OUc", 2, {0, 0, 0, 2, 36, 834, 15755, 274922, 4441810, -1}},
    {"OUc", 3, {0, 0, 0, 0, 0, 38, 2472, 94178, 2754060, -1}},
    {"OUc", 4, {0, 0, 0, 0, 0, 0, 0, 3988, 376388, -1}},
    {"OUb", -1, {1, 2, 7, 30, 210, 1960, 23276, 322964, 5165732, -1}},
    {"OUb", 0, {1, 2, 6, 21, 97, 579, 3812, 27328, 206410, 1625916}},
    {"OUb", 1, {0, 0, 1, 8, 93, 945, 10256, 109092, 1170002, -1}},
    {"OUb", 2, {0, 0, 0, 1, 20, 417, 7948, 137461, 2222562, -1}},
    {"OUb", 3, {0, 0, 0, 0, 0, 19, 1260, 47089, 1378256, -1}},
    {"OUb", 4, {0, 0, 0, 0, 0, 0, 0, 1994, 188502, -1}},
    {"UUc", -1, {1, 2, 7, 30, 210, 1960, 23235, 322964, 5164107, -1}},
    {"UUc", 0, {1, 2, 6, 21, 99, 579, 3829, 27328, 206543, 1625916}},
    {"UUc", 1, {0, 0, 1, 8, 93, 945, 10258, 109092, 1170053, -1}},
    {"UUc", 2, {0, 0, 0, 1, 18, 417, 7906, 137461, 2221759, -1}},
    {"UUc", 3, {0, 0, 0, 0, 0, 19, 1242, 47089, 1377494, -1}},
    {"UUc", 4, {0, 0, 0, 0, 0, 0, 0, 1994, 188258, -1}},
    {"UUb", -1, {1, 2, 7, 26, 152, 1168, 12548, 165742, 2605526, -1}},
    {"UUb", 0, {1, 2, 6, 19, 76, 376, 2194, 14614, 106421, 823832}},
    {"UUb", 1, {0, 0, 1, 6, 63, 539, 5508, 56067, 592457, -1}},
    {"UUb", 2, {0, 0, 0, 1, 13, 242, 4183, 70118, 1119180, -1}},
    {"UUb", 3, {0, 0, 0, 0, 0, 11, 663, 23907, 692749, -1}},
    {"UUb", 4, {0, 0, 0, 0, 0, 0, 0, 1036, 94719, -1}},
};

// genus split of the 2^n n! long curves, n = 1..9
inline const std::vector<std::vector<std::uint64_t>> kLongCurves = {
    {2},
    {8},
    {42, 6},
    {260, 116, 8},
    {1796, 1700, 344},
    {13396, 22528, 9700, 456},
    {105706, 284284, 220570, 34560},
    {870772, 3488904, 4392820, 1506576, 62848},
    {7420836, 42074568, 79951716, 49572528, 6774912},
};

// stabilizer spectra of Y' orbits: {k, number of orbits of length |C_rho|/k}
inline const std::vector<std::vector<std::pair<int, int>>> kYSpectrum = {
    {{2, 2}},
    {{1, 1}, {2, 2}},
    {{1, 4}, {2, 6}, {3, 2}, {6, 2}},
    {{1, 44}, {2, 6}, {4, 4}},
    {{1, 352}, {2, 62}, {5, 4}, {10, 2}},
    {{1, 3803}, {2, 62}, {3, 15}, {6, 6}},
    {{1, 45696}, {2, 766}, {7, 6}, {14, 2}},
    {{1, 644736}, {2, 752}, {4, 28}, {8, 8}},
};

// (x, y, z, v, w) per genus g = 0, 1, ...; missing genera are all zero
using Profile = std::array<std::uint64_t, 5>;
using ProfileTable = std::vector<std::vector<Profile>>;  // index n - 1

// (sm) pair on D_n orbits of U
inline const ProfileTable kSmDihedral = {
    {{1, 0, 0, 0, 0}},
    {{1, 0, 0, 1, 0}},
    {{0, 0, 0, 6, 0}, {0, 0, 0, 1, 0}},
    {{5, 0, 0, 12, 2}, {0, 0, 0, 4, 2}, {1, 0, 0, 0, 0}},
    {{0, 0, 0, 53, 23}, {0, 0, 0, 33, 30}, {0, 0, 0, 8, 5}},
    {{9, 12, 3, 152, 200}, {0, 0, 0, 133, 406}, {7, 10, 6, 50, 169}, {0, 0, 0, 3, 8}},
    {{0, 0, 0, 559, 1635}, {0, 0, 0, 758, 4750}, {0, 0, 0, 460, 3723}, {0, 0, 0, 84, 579}},
    {{39, 105, 29, 1756, 12685}, {0, 0, 0, 3042, 53025}, {47, 228, 104, 2500, 67239}, {0, 0, 0, 725, 23182},
     {10, 39, 21, 29, 937}},
};

// (sr) pair on Z_n orbits of U
inline const ProfileTable kSrCyclic = {
    {{0, 0, 1, 0, 0}},
    {{0, 0, 0, 1, 1}},
    {{0, 0, 3, 0, 3}, {0, 0, 1, 0, 0}},
    {{0, 0, 0, 5, 16}, {0, 0, 0, 0, 8}, {0, 0, 0, 1, 0}},
    {{0, 0, 16, 0, 83}, {0, 0, 16, 0, 77}, {0, 0, 0, 0, 18}},
    {{0, 0, 0, 33, 555}, {0, 0, 0, 0, 945}, {0, 0, 0, 27, 394}, {0, 0, 0, 0, 19}},
    {{0, 0, 105, 0, 3724}, {0, 0, 210, 0, 10048}, {0, 0, 57, 0, 7849}, {0, 0, 12, 0, 1230}},
    {{0, 0, 0, 249, 27155}, {0, 0, 0, 0, 109092}, {0, 0, 0, 503, 137082}, {0, 0, 0, 0, 47089}, {0, 0, 0, 88, 1924}},
};

// (sm) pair on Z_n orbits of U
inline const ProfileTable kSmCyclic = {
    {{0, 0, 0, 1, 0}},
    {{0, 0, 1, 0, 1}},
    {{0, 0, 0, 3, 3}, {0, 0, 0, 1, 0}},
    {{0, 0, 5, 0, 16}, {0, 0, 0, 0, 8}, {0, 0, 1, 0, 0}},
    {{0, 0, 0, 12, 85}, {0, 0, 0, 16, 77}, {0, 0, 0, 4, 16}},
    {{0, 0, 15, 0, 564}, {0, 0, 0, 0, 945}, {0, 0, 19, 0, 398}, {0, 0, 0, 0, 19}},
    {{0, 0, 0, 71, 3741}, {0, 0, 0, 206, 10050}, {0, 0, 0, 141, 7807}, {0, 0, 0, 48, 1212}},
    {{0, 0, 97, 0, 27231}, {0, 0, 0, 0, 109092}, {0, 0, 255, 0, 137206}, {0, 0, 0, 0, 47089}, {0, 0, 52, 0, 1942}},
};

// (rm) pair on S_n orbits of Z'
inline const ProfileTable kRmGeneral = {
    {{1, 0, 0, 0, 0}},
    {{1, 0, 0, 1, 0}, {1, 0, 0, 0, 0}},
    {{3, 0, 0, 3, 0}, {1, 0, 0, 3, 1}, {0, 0, 1, 0, 0}},
    {{5, 0, 0, 12, 2}, {7, 4, 2, 17, 15}, {2, 1, 2, 4, 13}},
    {{10, 3, 1, 42, 20}, {10, 3, 3, 98, 221}, {4, 6, 22, 56, 339}, {0, 0, 4, 0, 52}},
    {{9, 12, 3, 152, 200}, {34, 82, 40, 472, 2473}, {25, 58, 72, 473, 6929}, {12, 48, 49, 79, 3493}},
    {{35, 35, 18, 506, 1600}, {60, 75, 73, 2169, 27038}, {53, 182, 421, 3272, 120991}, {12, 60, 353, 1397, 137616},
     {0, 48, 116, 0, 17234}},
};
inline constexpr Profile kRmSpherical9 = {124, 328, 195, 5980, 99794};
inline constexpr Profile kRmSpherical10 = {98, 969, 247, 20681, 801837};  // sampled, reference only

}  // namespace fixtures
