// Point tables and published secant distributions for the built-in constructions.
// Token syntax: "wK" = omega^K in the entry's field; plain integer = base-p encoding.

#pragma once

namespace pgblock::detail {

struct CatalogEntryData {
  int q;
  int index;
  const char* points;       // q+2 off-axis points, ';'-separated "x y z" token triples
  const char* distribution; // published n_t for t >= 3, "t:n" pairs
  const char* cube_roots;   // third roots of unity, as printed
  const char* long_slopes;  // slopes of the >2-point origin lines
  const char* parameter;    // s^3
  bool symmetric;           // fixed by the coordinate swap T
};

inline constexpr CatalogEntryData kCatalog[] = {
    {13, 1,
     "1 1 1 ; 1 12 1 ; 2 8 1 ; 3 7 1 ; 4 3 1 ; 5 9 1 ; 6 10 1 ; 7 4 1 ; 8 2 1 ; "
     "9 5 1 ; 10 11 1 ; 11 6 1 ; 12 1 1 ; 1 3 0 ; 1 9 0",
     "12:2 8:1 7:1 6:4 5:10 4:19 3:51",
     "1 3 9", "4 10 12", "12", false},
    {16, 1,
     "1 w14 1 ; 1 w7 1 ; w1 w11 1 ; w2 w3 1 ; w3 w5 1 ; w4 w1 1 ; w5 w12 1 ; w6 w9 1 ; "
     "w7 w13 1 ; w8 w2 1 ; w9 w6 1 ; w10 w10 1 ; w11 1 1 ; w12 w8 1 ; w13 1 1 ; "
     "w14 w4 1 ; 1 w8 0 ; 1 w13 0",
     "15:2 9:1 7:1 6:3 5:20 4:37 3:69",
     "1 w5 w10", "w2 w7 w12", "w6", false},
    {19, 1,
     "1 4 1 ; 1 14 1 ; 2 18 1 ; 3 5 1 ; 6 13 1 ; 7 17 1 ; 4 1 1 ; 14 1 1 ; 18 2 1 ; "
     "5 3 1 ; 13 6 1 ; 17 7 1 ; 8 16 1 ; 9 15 1 ; 10 11 1 ; 12 12 1 ; 16 8 1 ; "
     "15 9 1 ; 11 10 1 ; 1 7 0 ; 1 11 0",
     "18:2 11:1 7:2 6:4 5:22 4:57 3:111",
     "1 7 11", "8 12 18", "18", true},
    {19, 2,
     "1 4 1 ; 1 14 1 ; 2 12 1 ; 3 17 1 ; 5 5 1 ; 6 7 1 ; 4 1 1 ; 14 1 1 ; 12 2 1 ; "
     "17 3 1 ; 7 6 1 ; 8 11 1 ; 9 13 1 ; 10 15 1 ; 16 18 1 ; 11 8 1 ; 13 9 1 ; "
     "15 10 1 ; 18 16 1 ; 1 2 0 ; 1 10 0",
     "18:2 8:2 7:2 6:5 5:28 4:39 3:122",
     "1 7 11", "8 12 18", "18", true},
    {25, 1,
     "1 w4 1 ; 1 w8 1 ; 2 w10 1 ; 3 w11 1 ; 4 w2 1 ; w4 1 1 ; w8 1 1 ; w10 2 1 ; "
     "w11 3 1 ; w2 4 1 ; w1 w13 1 ; w3 w21 1 ; w5 w14 1 ; w7 w9 1 ; w15 w20 1 ; "
     "w13 w1 1 ; w21 w3 1 ; w14 w5 1 ; w9 w7 1 ; w20 w15 1 ; w16 w17 1 ; w19 w22 1 ; "
     "w23 w23 1 ; w17 w16 1 ; w22 w19 1 ; 1 w11 0 ; 1 w13 0",
     "24:2 9:1 7:6 6:15 5:24 4:101 3:207",
     "1 w8 w16", "4 w4 w20", "4", true},
    {27, 1,
     "1 w1 1 ; 1 w12 1 ; 2 w3 1 ; w2 w25 1 ; w4 w17 1 ; w1 1 1 ; w12 1 1 ; w3 2 1 ; "
     "w25 w2 1 ; w17 w4 1 ; w5 w10 1 ; w6 w24 1 ; w7 w7 1 ; w8 w21 1 ; w9 w20 1 ; "
     "w10 w5 1 ; w24 w6 1 ; w21 w8 1 ; w20 w9 1 ; w11 w18 1 ; w14 w23 1 ; w15 w19 1 ; "
     "w16 w22 1 ; w18 w11 1 ; w23 w14 1 ; w19 w15 1 ; w22 w16 1 ; 1 w2 0 ; 1 w24 0",
     "26:2 7:2 6:15 5:55 4:124 3:195",
     "1", "2", "2", true},
    {31, 1,
     "1 1 1 ; 1 30 1 ; 2 12 1 ; 3 11 1 ; 4 6 1 ; 5 9 1 ; 30 1 1 ; 12 2 1 ; 11 3 1 ; "
     "6 4 1 ; 9 5 1 ; 7 19 1 ; 8 13 1 ; 10 26 1 ; 14 23 1 ; 15 17 1 ; 16 22 1 ; "
     "19 7 1 ; 13 8 1 ; 26 10 1 ; 23 14 1 ; 17 15 1 ; 22 16 1 ; 18 21 1 ; 20 25 1 ; "
     "24 29 1 ; 27 28 1 ; 21 18 1 ; 25 20 1 ; 29 24 1 ; 28 27 1 ; 1 5 0 ; 1 25 0",
     "30:2 10:1 8:4 7:4 6:12 5:58 4:147 3:334",
     "1 5 25", "6 26 30", "30", true},
    {31, 2,
     "1 9 1 ; 1 24 1 ; 2 10 1 ; 3 29 1 ; 4 17 1 ; 5 6 1 ; 9 1 1 ; 24 1 1 ; 10 2 1 ; "
     "29 3 1 ; 17 4 1 ; 6 5 1 ; 7 21 1 ; 8 16 1 ; 11 20 1 ; 12 28 1 ; 13 30 1 ; "
     "14 25 1 ; 21 7 1 ; 16 8 1 ; 20 11 1 ; 28 12 1 ; 30 13 1 ; 25 14 1 ; 15 26 1 ; "
     "18 22 1 ; 19 23 1 ; 27 27 1 ; 26 15 1 ; 22 18 1 ; 23 19 1 ; 1 6 0 ; 1 26 0",
     "30:2 8:2 7:2 6:24 5:58 4:153 3:304",
     "1 5 25", "6 26 30", "30", true},
    {31, 3,
     "1 21 1 ; 1 28 1 ; 2 30 1 ; 3 3 1 ; 4 27 1 ; 5 23 1 ; 21 1 1 ; 28 1 1 ; 30 2 1 ; "
     "27 4 1 ; 23 5 1 ; 6 17 1 ; 7 11 1 ; 8 29 1 ; 9 14 1 ; 10 16 1 ; 12 22 1 ; "
     "17 6 1 ; 11 7 1 ; 29 8 1 ; 14 9 1 ; 16 10 1 ; 22 12 1 ; 13 26 1 ; 15 25 1 ; "
     "18 24 1 ; 19 20 1 ; 26 13 1 ; 25 15 1 ; 24 18 1 ; 20 19 1 ; 1 6 0 ; 1 26 0",
     "30:2 7:4 6:22 5:65 4:154 3:291",
     "1 5 25", "6 26 30", "30", true},
    {37, 1,
     "1 3 1 ; 1 12 1 ; 2 2 1 ; 4 5 1 ; 6 32 1 ; 7 19 1 ; 3 1 1 ; 12 1 1 ; 5 4 1 ; "
     "32 6 1 ; 19 7 1 ; 8 29 1 ; 9 25 1 ; 10 24 1 ; 11 35 1 ; 13 15 1 ; 14 16 1 ; "
     "29 8 1 ; 25 9 1 ; 24 10 1 ; 35 11 1 ; 15 13 1 ; 16 14 1 ; 17 33 1 ; 18 28 1 ; "
     "20 22 1 ; 21 27 1 ; 23 30 1 ; 26 34 1 ; 33 17 1 ; 28 18 1 ; 22 20 1 ; 27 21 1 ; "
     "30 23 1 ; 34 26 1 ; 31 36 1 ; 36 31 1 ; 1 10 0 ; 1 26 0",
     "36:2 8:3 7:6 6:27 5:79 4:230 3:445",
     "1 10 26", "11 27 36", "36", true},
    {43, 1,
     "1 18 1 ; 1 31 1 ; 2 39 1 ; 3 40 1 ; 4 36 1 ; 5 28 1 ; 18 1 1 ; 31 1 1 ; 39 2 1 ; "
     "40 3 1 ; 36 4 1 ; 28 5 1 ; 6 27 1 ; 7 16 1 ; 8 32 1 ; 9 15 1 ; 10 26 1 ; "
     "11 33 1 ; 27 6 1 ; 16 7 1 ; 32 8 1 ; 15 9 1 ; 26 10 1 ; 33 11 1 ; 12 21 1 ; "
     "13 23 1 ; 14 22 1 ; 17 34 1 ; 19 19 1 ; 20 38 1 ; 21 12 1 ; 23 13 1 ; 22 14 1 ; "
     "34 17 1 ; 38 20 1 ; 24 25 1 ; 29 41 1 ; 30 37 1 ; 35 42 1 ; 25 24 1 ; 41 29 1 ; "
     "37 30 1 ; 42 35 1 ; 1 6 0 ; 1 36 0",
     "42:2 8:4 7:8 6:26 5:122 4:321 3:590",
     "1 6 36", "7 37 42", "42", true},
};

}  // namespace pgblock::detail
