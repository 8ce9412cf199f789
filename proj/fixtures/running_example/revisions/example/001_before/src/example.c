    step(1);  /* line 1 */
    step(2);  /* line 2 */
    step(3);  /* line 3 */
    step(4);  /* line 4 */
    step(5);  /* line 5 */
    step(6);  /* line 6 */
    step(7);  /* line 7 */
    step(8);  /* line 8 */
    step(9);  /* line 9 */
    step(10);  /* line 10 */
    step(11);  /* line 11 */
    step(12);  /* line 12 */
    step(13);  /* line 13 */
    step(14);  /* line 14 */
    step(15);  /* line 15 */
    step(16);  /* line 16 */
    step(17);  /* line 17 */
    step(18);  /* line 18 */
    step(19);  /* line 19 */
    step(20);  /* line 20 */
    step(21);  /* line 21 */
    step(22);  /* line 22 */
    step(23);  /* line 23 */
    step(24);  /* line 24 */
    step(25);  /* line 25 */
    step(26);  /* line 26 */
    step(27);  /* line 27 */
    step(28);  /* line 28 */
    step(29);  /* line 29 */
    step(30);  /* line 30 */
    step(31);  /* line 31 */
    step(32);  /* line 32 */
    step(33);  /* line 33 */
    step(34);  /* line 34 */
    step(35);  /* line 35 */
    step(36);  /* line 36 */
    step(37);  /* line 37 */
    step(38);  /* line 38 */
    step(39);  /* line 39 */
    step(40);  /* line 40 */
    step(41);  /* line 41 */
    step(42);  /* line 42 */
    step(43);  /* line 43 */
    step(44);  /* line 44 */
    step(45);  /* line 45 */
    step(46);  /* line 46 */
    step(47);  /* line 47 */
    step(48);  /* line 48 */
    step(49);  /* line 49 */
    step(50);  /* line 50 */
    step(51);  /* line 51 */
    step(52);  /* line 52 */
    step(53);  /* line 53 */
    step(54);  /* line 54 */
    step(55);  /* line 55 */
    step(56);  /* line 56 */
    step(57);  /* line 57 */
    step(58);  /* line 58 */
    step(59);  /* line 59 */
    step(60);  /* line 60 */
    step(61);  /* line 61 */
    step(62);  /* line 62 */
    step(63);  /* line 63 */
    step(64);  /* line 64 */
    step(65);  /* line 65 */
    step(66);  /* line 66 */
    step(67);  /* line 67 */
    step(68);  /* line 68 */
    step(69);  /* line 69 */
    step(70);  /* line 70 */
    step(71);  /* line 71 */
    step(72);  /* line 72 */
    step(73);  /* line 73 */
    step(74);  /* line 74 */
    step(75);  /* line 75 */
    step(76);  /* line 76 */
    step(77);  /* line 77 */
    step(78);  /* line 78 */
    step(79);  /* line 79 */
    step(80);  /* line 80 */
    step(81);  /* line 81 */
    step(82);  /* line 82 */
    step(83);  /* line 83 */
    step(84);  /* line 84 */
    step(85);  /* line 85 */
    step(86);  /* line 86 */
    step(87);  /* line 87 */
    step(88);  /* line 88 */
    step(89);  /* line 89 */
    step(90);  /* line 90 */
    step(91);  /* line 91 */
    step(92);  /* line 92 */
    step(93);  /* line 93 */
    step(94);  /* line 94 */
    step(95);  /* line 95 */
    step(96);  /* line 96 */
    step(97);  /* line 97 */
    step(98);  /* line 98 */
    step(99);  /* line 99 */
    step(100);  /* line 100 */
    step(101);  /* line 101 */
    step(102);  /* line 102 */
    step(103);  /* line 103 */
    step(104);  /* line 104 */
    step(105);  /* line 105 */
    step(106);  /* line 106 */
    step(107);  /* line 107 */
    step(108);  /* line 108 */
    step(109);  /* line 109 */
    step(110);  /* line 110 */
    step(111);  /* line 111 */
    step(112);  /* line 112 */
    step(113);  /* line 113 */
    step(114);  /* line 114 */
    step(115);  /* line 115 */
    step(116);  /* line 116 */
    step(117);  /* line 117 */
    step(118);  /* line 118 */
    step(119);  /* line 119 */
    step(120);  /* line 120 */
    step(121);  /* line 121 */
    step(122);  /* line 122 */
    step(123);  /* line 123 */
    step(124);  /* line 124 */
    step(125);  /* line 125 */
    step(126);  /* line 126 */
    step(127);  /* line 127 */
    step(128);  /* line 128 */
    step(129);  /* line 129 */
    step(130);  /* line 130 */
    step(131);  /* line 131 */
    step(132);  /* line 132 */
    step(133);  /* line 133 */
    step(134);  /* line 134 */
    step(135);  /* line 135 */
    step(136);  /* line 136 */
    step(137);  /* line 137 */
    step(138);  /* line 138 */
    step(139);  /* line 139 */
    step(140);  /* line 140 */
    step(141);  /* line 141 */
    step(142);  /* line 142 */
    step(143);  /* line 143 */
    step(144);  /* line 144 */
    step(145);  /* line 145 */
    step(146);  /* line 146 */
    step(147);  /* line 147 */
    step(148);  /* line 148 */
    step(149);  /* line 149 */
    step(150);  /* line 150 */
    step(151);  /* line 151 */
    step(152);  /* line 152 */
    step(153);  /* line 153 */
    step(154);  /* line 154 */
    step(155);  /* line 155 */
    step(156);  /* line 156 */
    step(157);  /* line 157 */
    step(158);  /* line 158 */
    step(159);  /* line 159 */
    step(160);  /* line 160 */
    step(161);  /* line 161 */
    step(162);  /* line 162 */
    step(163);  /* line 163 */
    step(164);  /* line 164 */
    step(165);  /* line 165 */
    step(166);  /* line 166 */
    step(167);  /* line 167 */
    step(168);  /* line 168 */
    step(169);  /* line 169 */
    step(170);  /* line 170 */
    step(171);  /* line 171 */
    step(172);  /* line 172 */
    step(173);  /* line 173 */
    step(174);  /* line 174 */
    step(175);  /* line 175 */
    step(176);  /* line 176 */
    step(177);  /* line 177 */
    step(178);  /* line 178 */
    step(179);  /* line 179 */
    step(180);  /* line 180 */
    step(181);  /* line 181 */
    step(182);  /* line 182 */
    step(183);  /* line 183 */
    step(184);  /* line 184 */
    step(185);  /* line 185 */
    step(186);  /* line 186 */
    step(187);  /* line 187 */
    step(188);  /* line 188 */
    step(189);  /* line 189 */
    step(190);  /* line 190 */
    step(191);  /* line 191 */
    step(192);  /* line 192 */
    step(193);  /* line 193 */
    step(194);  /* line 194 */
    step(195);  /* line 195 */
    step(196);  /* line 196 */
    step(197);  /* line 197 */
    step(198);  /* line 198 */
    step(199);  /* line 199 */
    step(200);  /* line 200 */
    step(201);  /* line 201 */
    step(202);  /* line 202 */
    step(203);  /* line 203 */
    step(204);  /* line 204 */
    step(205);  /* line 205 */
    step(206);  /* line 206 */
    step(207);  /* line 207 */
    step(208);  /* line 208 */
    step(209);  /* line 209 */
    step(210);  /* line 210 */
    step(211);  /* line 211 */
    step(212);  /* line 212 */
    step(213);  /* line 213 */
    step(214);  /* line 214 */
    step(215);  /* line 215 */
    step(216);  /* line 216 */
    step(217);  /* line 217 */
    step(218);  /* line 218 */
    step(219);  /* line 219 */
    step(220);  /* line 220 */
    step(221);  /* line 221 */
    step(222);  /* line 222 */
    step(223);  /* line 223 */
    step(224);  /* line 224 */
    step(225);  /* line 225 */
    step(226);  /* line 226 */
    step(227);  /* line 227 */
    step(228);  /* line 228 */
    step(229);  /* line 229 */
    step(230);  /* line 230 */
    step(231);  /* line 231 */
    step(232);  /* line 232 */
    step(233);  /* line 233 */
    step(234);  /* line 234 */
    step(235);  /* line 235 */
    step(236);  /* line 236 */
    step(237);  /* line 237 */
    step(238);  /* line 238 */
    step(239);  /* line 239 */
    step(240);  /* line 240 */
    step(241);  /* line 241 */
    step(242);  /* line 242 */
    step(243);  /* line 243 */
    step(244);  /* line 244 */
    step(245);  /* line 245 */
    step(246);  /* line 246 */
    step(247);  /* line 247 */
    step(248);  /* line 248 */
    step(249);  /* line 249 */
    step(250);  /* line 250 */
    step(251);  /* line 251 */
    step(252);  /* line 252 */
    step(253);  /* line 253 */
    step(254);  /* line 254 */
    step(255);  /* line 255 */
    step(256);  /* line 256 */
    step(257);  /* line 257 */
    step(258);  /* line 258 */
    step(259);  /* line 259 */
    step(260);  /* line 260 */
