#pragma once

// Worked-example vectors for n = 607 * 809 = 491063, m = 202, w = 239823,
// copied verbatim from the printed examples.

#include <array>
#include <cstdint>
#include <string_view>

namespace fixtures {

inline constexpr std::uint64_t kN = 491063;
inline constexpr std::uint64_t kP = 607;
inline constexpr std::uint64_t kQ = 809;
inline constexpr std::uint64_t kM = 202;
inline constexpr std::uint64_t kE = 361123;
inline constexpr std::uint64_t kD = 18523;
inline constexpr std::uint64_t kPhi = 489648;
inline constexpr std::uint64_t kOmega = 239823;
inline constexpr std::uint64_t kC = 142638;

// RSA-DFT message as given by its printed code vector (101 symbols).
inline constexpr std::string_view kDftMessage =
    "MY BANK DETAILS: NAME: JACK CARD NUMBER:4125678 SORT CODE:20-30-41 ACCOUNTNUMBER:20164 BANK:OVERSEAS.";

// The printed ciphertext elides the middle; only both ends are known.
inline constexpr std::array<std::uint64_t, 30> kDftCipherPrefix = {
    5640, 28875, 82477, 377806, 380572, 399487, 350120, 214346, 101686, 277011,
    93173, 220930, 72573, 42514, 361289, 476177, 371780, 243907, 179047, 292166,
    427665, 243623, 344397, 155022, 360049, 312478, 305875, 392901, 193460, 440042,
};

inline constexpr std::array<std::uint64_t, 15> kDftCipherSuffix = {
    216155, 440701, 157904, 342869, 348795, 159340, 140193, 222089, 326519, 95581,
    431250, 15009, 166938, 384271, 452109,
};

inline constexpr std::string_view kHgrMessage =
    "AN IMMINENT ATTACK ON YOU WILL HAPPEN TOMORROW EVENING AT 5:30 PM. BE ALERT AND TAKE PRECAUTIONS.";

// Symbol order 0-9, A-Z, blank, colon, period, hyphen. K/M share 80303 and
// L/N share 52853.
inline constexpr std::array<std::uint64_t, 40> kHgrTable = {
    221373, 389086, 21415, 428230, 162920, 126345, 81308, 490630, 22673, 4004,
    162483, 2255, 183775, 4129, 221927, 437699, 275130, 50473, 123651, 114773,
    80303, 52853, 80303, 52853, 114288, 473119, 323343, 26857, 91043, 98057,
    150255, 24495, 86867, 176089, 206140, 461772, 348362, 90605, 5932, 275062,
};

inline constexpr std::array<std::uint64_t, 202> kHgrLambdas = {
    162483, 52853, 348362, 123651, 80303, 80303, 123651, 52853, 221927, 52853,
    98057, 348362, 162483, 98057, 98057, 162483, 183775, 80303, 348362, 114288,
    52853, 348362, 206140, 114288, 150255, 348362, 86867, 123651, 52853, 52853,
    348362, 50473, 162483, 473119, 473119, 221927, 52853, 348362, 98057, 114288,
    80303, 114288, 26857, 26857, 114288, 86867, 348362, 221927, 24495, 221927,
    52853, 123651, 52853, 275130, 348362, 162483, 98057, 348362, 126345, 90605,
    428230, 221373, 348362, 473119, 80303, 5932, 348362, 2255, 221927, 348362,
    162483, 52853, 221927, 26857, 98057, 348362, 162483, 52853, 4129, 348362,
    98057, 162483, 80303, 221927, 348362, 473119, 26857, 221927, 183775, 162483,
    150255, 98057, 123651, 114288, 52853, 91043, 5932, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362, 348362,
    348362, 348362,
};

inline constexpr std::array<std::uint64_t, 202> kHgrCoefficients = {
    252493, 450589, 460479, 204758, 233506, 353306, 421232, 356924, 301091, 289893,
    288179, 242097, 326234, 13515, 346524, 267905, 60544, 1589, 224877, 392891,
    393603, 346149, 126356, 374713, 42452, 30660, 444474, 328107, 278316, 320329,
    215968, 8062, 69501, 442389, 463363, 20437, 184879, 111644, 215157, 487962,
    182507, 157039, 200299, 355976, 90232, 362884, 407252, 282817, 324527, 299628,
    83392, 380613, 274931, 455342, 28745, 445319, 430230, 446985, 347595, 201469,
    91852, 53863, 48802, 172649, 95573, 70434, 71251, 95329, 257149, 125640,
    436246, 37716, 452002, 143402, 221576, 137122, 379802, 91038, 217808, 73515,
    245279, 62765, 16846, 473375, 284904, 470346, 392515, 31311, 386722, 228015,
    471883, 95686, 284880, 373228, 282251, 461945, 347587, 372751, 243942, 339087,
    441737, 321411, 205845, 172853, 450407, 431493, 72268, 378074, 403244, 261526,
    363362, 372773, 193094, 61896, 76335, 442360, 12418, 333213, 349588, 137997,
    465244, 464347, 453371, 370624, 414389, 329819, 99661, 168143, 270109, 194801,
    460848, 483049, 98372, 225436, 184156, 147000, 137130, 254978, 435708, 227589,
    126220, 45283, 312941, 108458, 176782, 55396, 134718, 440134, 367637, 450466,
    32149, 44665, 445959, 120765, 447216, 362999, 402427, 210408, 171884, 486885,
    280531, 322673, 116715, 483483, 398994, 31300, 134031, 431195, 434524, 172474,
    198368, 111628, 469394, 198059, 11214, 387413, 93105, 390274, 263412, 304750,
    333166, 415475, 31915, 125737, 36184, 115899, 390465, 6472, 173688, 208819,
    168514, 197636, 136348, 410545, 200343, 316617, 47292, 286043, 112122, 239726,
    361815, 85601,
};

}  // namespace fixtures
