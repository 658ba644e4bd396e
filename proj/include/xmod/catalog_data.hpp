// Generated by tools/gen_catalog.py; do not edit.
#pragma once

namespace xmod::detail {

inline constexpr const char* kBundledCatalog = R"catalog(xmod-catalog 1
1 1 1 | ()
2 1 C2 | (1,2)
3 1 C3 | (1,2,3)
4 1 C4 | (1,2,3,4)
4 2 C2 x C2 | (1,2)(3,4) | (1,3)(2,4)
5 1 C5 | (1,2,3,4,5)
6 1 S3 | (1,2,4)(3,5,6) | (1,3)(2,6)(4,5)
6 2 C6 | (1,2,3,4,5,6)
7 1 C7 | (1,2,3,4,5,6,7)
8 1 C8 | (1,2,3,4,5,6,7,8)
8 2 C4 x C2 | (1,2,4,6)(3,5,7,8) | (1,3)(2,5)(4,7)(6,8)
8 3 D8 | (1,2,4,7)(3,5,8,6) | (1,3)(2,6)(4,8)(5,7)
8 4 Q8 | (1,2,4,7)(3,5,8,6) | (1,3,4,8)(2,6,7,5)
8 5 C2 x C2 x C2 | (1,2)(3,5)(4,6)(7,8) | (1,3)(2,5)(4,7)(6,8) | (1,4)(2,6)(3,7)(5,8)
9 1 C9 | (1,2,3,4,5,6,7,8,9)
9 2 C3 x C3 | (1,2,4)(3,5,7)(6,8,9) | (1,3,6)(2,5,8)(4,7,9)
10 1 D10 | (1,2,4,7,10)(3,5,8,9,6) | (1,3)(2,6)(4,9)(5,10)(7,8)
10 2 C10 | (1,2,3,4,5,6,7,8,9,10)
11 1 C11 | (1,2,3,4,5,6,7,8,9,10,11)
12 1 C3 : C4 | (1,2,4)(3,5,6)(7,8,9)(10,11,12) | (1,3,7,10)(2,6,8,12)(4,5,9,11)
12 2 C12 | (1,2,3,4,5,6,7,8,9,10,11,12)
12 3 A4 | (1,2,4)(3,5,7)(6,8,11)(9,12,10) | (1,3)(2,6)(4,9)(5,10)(7,8)(11,12)
12 4 D12 | (1,2,4,7,11,10)(3,5,8,12,9,6) | (1,3)(2,6)(4,9)(5,10)(7,12)(8,11)
12 5 C6 x C2 | (1,2,4,6,8,10)(3,5,7,9,11,12) | (1,3)(2,5)(4,7)(6,9)(8,11)(10,12)
13 1 C13 | (1,2,3,4,5,6,7,8,9,10,11,12,13)
14 1 D14 | (1,2,4,7,11,14,10)(3,5,8,12,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,12)
14 2 C14 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14)
15 1 C15 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)
16 1 C16 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)
16 2 C4 x C4 | (1,2,4,7)(3,5,8,11)(6,9,12,14)(10,13,15,16) | (1,3,6,10)(2,5,9,13)(4,8,12,15)(7,11,14,16)
16 3 (C4 x C2) : C2 | (1,2,5,10)(3,6,11,14)(4,7,12,15)(8,9,13,16) | (1,3)(2,6)(4,8)(5,11)(7,9)(10,14)(12,13)(15,16) | (1,4)(2,9)(3,8)(5,12)(6,7)(10,16)(11,13)(14,15)
16 4 C4 : C4 | (1,2,4,8)(3,5,9,6)(7,10,13,11)(12,14,16,15) | (1,3,7,12)(2,6,10,15)(4,9,13,16)(5,11,14,8)
16 5 C8 x C2 | (1,2,4,6,8,10,12,14)(3,5,7,9,11,13,15,16) | (1,3)(2,5)(4,7)(6,9)(8,11)(10,13)(12,15)(14,16)
16 6 C8 : C2 | (1,2,4,7,11,10,14,16)(3,5,8,12,15,6,9,13) | (1,3)(2,6)(4,8)(5,10)(7,13)(9,14)(11,15)(12,16)
16 7 D16 | (1,2,4,7,11,15,14,10)(3,5,8,12,16,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,16)(12,15)
16 8 QD16 | (1,2,4,7,11,15,14,16)(3,5,8,6,9,12,10,13) | (1,3)(2,6)(4,10)(5,7)(8,14)(9,11)(12,16)(13,15)
16 9 Q16 | (1,2,4,8,7,10,14,16)(3,5,9,13,12,15,11,6) | (1,3,7,12)(2,6,10,13)(4,11,14,9)(5,8,15,16)
16 10 C4 x C2 x C2 | (1,2,5,9)(3,6,10,13)(4,7,11,14)(8,12,15,16) | (1,3)(2,6)(4,8)(5,10)(7,12)(9,13)(11,15)(14,16) | (1,4)(2,7)(3,8)(5,11)(6,12)(9,14)(10,15)(13,16)
16 11 C2 x D8 | (1,2)(3,5)(4,6)(7,10)(8,11)(9,12)(13,15)(14,16) | (1,3,7,13)(2,5,10,15)(4,8,14,9)(6,11,16,12) | (1,4)(2,6)(3,9)(5,12)(7,14)(8,13)(10,16)(11,15)
16 12 C2 x Q8 | (1,2)(3,5)(4,6)(7,10)(8,11)(9,12)(13,15)(14,16) | (1,3,7,13)(2,5,10,15)(4,8,14,9)(6,11,16,12) | (1,4,7,14)(2,6,10,16)(3,9,13,8)(5,12,15,11)
16 13 (C4 x C2) : C2 central | (1,2,5,10)(3,6,11,15)(4,7,12,16)(8,13,9,14) | (1,3)(2,6)(4,8)(5,11)(7,13)(9,12)(10,15)(14,16) | (1,4)(2,7)(3,9)(5,12)(6,14)(8,11)(10,16)(13,15)
16 14 C2 x C2 x C2 x C2 | (1,2)(3,6)(4,7)(5,8)(9,12)(10,13)(11,14)(15,16) | (1,3)(2,6)(4,9)(5,10)(7,12)(8,13)(11,15)(14,16) | (1,4)(2,7)(3,9)(5,11)(6,12)(8,14)(10,15)(13,16) | (1,5)(2,8)(3,10)(4,11)(6,13)(7,14)(9,15)(12,16)
17 1 C17 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17)
18 1 D18 | (1,2,4,7,11,15,18,14,10)(3,5,8,12,16,17,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,17)(12,18)(15,16)
18 2 C18 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18)
18 3 C3 x S3 | (1,2,5)(3,6,11)(4,7,12)(8,13,16)(9,14,17)(10,15,18) | (1,3,8)(2,6,13)(4,9,10)(5,11,16)(7,14,15)(12,17,18) | (1,4)(2,7)(3,10)(5,12)(6,15)(8,9)(11,18)(13,14)(16,17)
18 4 (C3 x C3) : C2 | (1,2,5)(3,6,12)(4,7,10)(8,13,18)(9,14,16)(11,15,17) | (1,3,8)(2,6,13)(4,9,11)(5,12,18)(7,14,15)(10,16,17) | (1,4)(2,10)(3,11)(5,7)(6,17)(8,9)(12,15)(13,16)(14,18)
18 5 C6 x C3 | (1,2,4,7,10,13)(3,5,8,11,14,16)(6,9,12,15,17,18) | (1,3,6)(2,5,9)(4,8,12)(7,11,15)(10,14,17)(13,16,18)
19 1 C19 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19)
20 1 C5 : C4 | (1,2,4,8,14)(3,5,9,11,6)(7,10,15,17,12)(13,16,19,20,18) | (1,3,7,13)(2,6,10,18)(4,11,15,20)(5,12,16,14)(8,9,17,19)
20 2 C20 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20)
20 3 C5 : C4 faithful | (1,2,4,8,15)(3,5,6,9,11)(7,10,12,16,13)(14,17,18,20,19) | (1,3,7,14)(2,6,13,20)(4,11,16,17)(5,12,19,8)(9,10,18,15)
20 4 D20 | (1,2,4,7,11,15,19,18,14,10)(3,5,8,12,16,20,17,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,17)(12,18)(15,20)(16,19)
20 5 C10 x C2 | (1,2,4,6,8,10,12,14,16,18)(3,5,7,9,11,13,15,17,19,20) | (1,3)(2,5)(4,7)(6,9)(8,11)(10,13)(12,15)(14,17)(16,19)(18,20)
21 1 C7 : C3 | (1,2,4,8,14,20,21)(3,5,6,9,11,15,18)(7,10,12,16,13,17,19) | (1,3,7)(2,6,13)(4,11,10)(5,12,14)(8,18,17)(9,19,20)(15,16,21)
21 2 C21 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21)
22 1 D22 | (1,2,4,7,11,15,19,22,18,14,10)(3,5,8,12,16,20,21,17,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,17)(12,18)(15,21)(16,22)(19,20)
22 2 C22 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22)
23 1 C23 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)
24 1 C3 : C8 | (1,2,4)(3,5,6)(7,8,9)(10,11,12)(13,14,15)(16,17,18)(19,20,21)(22,23,24) | (1,3,7,10,13,16,19,22)(2,6,8,12,14,18,20,24)(4,5,9,11,15,17,21,23)
24 2 C24 | (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24)
24 3 SL(2,3) | (1,2,4)(3,5,8)(6,9,14)(7,10,15)(11,16,12)(13,17,20)(18,21,19)(22,24,23) | (1,3,7,13)(2,6,10,19)(4,11,15,23)(5,12,17,24)(8,18,20,9)(14,22,21,16)
24 4 C3 : Q8 | (1,2,4,8,14,12,7,10,16,21,24,23)(3,5,9,15,20,19,13,17,22,18,11,6) | (1,3,7,13)(2,6,10,19)(4,11,16,20)(5,12,17,23)(8,18,21,15)(9,14,22,24)
24 5 C4 x S3 | (1,2,5,11)(3,6,12,17)(4,7,13,18)(8,14,19,22)(9,15,20,23)(10,16,21,24) | (1,3,8)(2,6,14)(4,9,10)(5,12,19)(7,15,16)(11,17,22)(13,20,21)(18,23,24) | (1,4)(2,7)(3,10)(5,13)(6,16)(8,9)(11,18)(12,21)(14,15)(17,24)(19,20)(22,23)
24 6 D24 | (1,2,4,7,11,15,19,23,22,18,14,10)(3,5,8,12,16,20,24,21,17,13,9,6) | (1,3)(2,6)(4,9)(5,10)(7,13)(8,14)(11,17)(12,18)(15,21)(16,22)(19,24)(20,23)
24 7 C2 x (C3 : C4) | (1,2)(3,5)(4,6)(7,11)(8,12)(9,13)(10,14)(15,18)(16,19)(17,20)(21,23)(22,24) | (1,3,7)(2,5,11)(4,8,9)(6,12,13)(10,15,16)(14,18,19)(17,21,22)(20,23,24) | (1,4,10,17)(2,6,14,20)(3,9,15,22)(5,13,18,24)(7,8,16,21)(11,12,19,23)
24 8 (C6 x C2) : C2 | (1,2,5)(3,6,8)(4,7,12)(9,13,16)(10,14,17)(11,15,20)(18,21,23)(19,22,24) | (1,3,9,18)(2,8,13,23)(4,10,19,11)(5,6,16,21)(7,17,22,20)(12,14,24,15) | (1,4)(2,7)(3,11)(5,12)(6,15)(8,20)(9,19)(10,18)(13,22)(14,21)(16,24)(17,23)
24 9 C12 x C2 | (1,2,4,6,8,10,12,14,16,18,20,22)(3,5,7,9,11,13,15,17,19,21,23,24) | (1,3)(2,5)(4,7)(6,9)(8,11)(10,13)(12,15)(14,17)(16,19)(18,21)(20,23)(22,24)
24 10 C3 x D8 | (1,2,5)(3,6,11)(4,7,12)(8,13,18)(9,14,19)(10,15,20)(16,21,23)(17,22,24) | (1,3,8,16)(2,6,13,21)(4,9,17,10)(5,11,18,23)(7,14,22,15)(12,19,24,20) | (1,4)(2,7)(3,10)(5,12)(6,15)(8,17)(9,16)(11,20)(13,22)(14,21)(18,24)(19,23)
24 11 C3 x Q8 | (1,2,5)(3,6,11)(4,7,12)(8,13,18)(9,14,19)(10,15,20)(16,21,23)(17,22,24) | (1,3,8,16)(2,6,13,21)(4,9,17,10)(5,11,18,23)(7,14,22,15)(12,19,24,20) | (1,4,8,17)(2,7,13,22)(3,10,16,9)(5,12,18,24)(6,15,21,14)(11,20,23,19)
24 12 S4 | (1,2,4,7)(3,5,8,12)(6,9,13,17)(10,14,18,22)(11,15,19,23)(16,20,24,21) | (1,3)(2,6)(4,10)(5,11)(7,15)(8,16)(9,12)(13,21)(14,17)(18,24)(19,22)(20,23)
24 13 C2 x A4 | (1,2)(3,5)(4,6)(7,10)(8,11)(9,12)(13,17)(14,18)(15,19)(16,20)(21,23)(22,24) | (1,3,7)(2,5,10)(4,8,13)(6,11,17)(9,14,21)(12,18,23)(15,22,16)(19,24,20) | (1,4)(2,6)(3,9)(5,12)(7,15)(8,16)(10,19)(11,20)(13,14)(17,18)(21,22)(23,24)
24 14 C2 x C2 x S3 | (1,2)(3,6)(4,7)(5,8)(9,14)(10,15)(11,16)(12,17)(13,18)(19,22)(20,23)(21,24) | (1,3)(2,6)(4,9)(5,10)(7,14)(8,15)(11,19)(12,20)(13,21)(16,22)(17,23)(18,24) | (1,4,11)(2,7,16)(3,9,19)(5,12,13)(6,14,22)(8,17,18)(10,20,21)(15,23,24) | (1,5)(2,8)(3,10)(4,13)(6,15)(7,18)(9,21)(11,12)(14,24)(16,17)(19,20)(22,23)
24 15 C6 x C2 x C2 | (1,2,5,9,13,17)(3,6,10,14,18,21)(4,7,11,15,19,22)(8,12,16,20,23,24) | (1,3)(2,6)(4,8)(5,10)(7,12)(9,14)(11,16)(13,18)(15,20)(17,21)(19,23)(22,24) | (1,4)(2,7)(3,8)(5,11)(6,12)(9,15)(10,16)(13,19)(14,20)(17,22)(18,23)(21,24)
)catalog";

}  // namespace xmod::detail
