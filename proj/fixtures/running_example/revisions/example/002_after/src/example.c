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
    step_v2(11);  /* C1 */
    step_v2(12);  /* C1 */
    step_v2(13);  /* C1 */
    step(14);  /* line 14 */
    step(15);  /* line 15 */
    step(16);  /* line 16 */
    step(17);  /* line 17 */
    step(18);  /* line 18 */
    step(19);  /* line 19 */
    step(20);  /* line 20 */
    step_v2(21);  /* C2 */
    step_v2(22);  /* C2 */
    step_v2(23);  /* C2 */
    step(24);  /* line 24 */
    step(25);  /* line 25 */
    step(26);  /* line 26 */
    step(27);  /* line 27 */
    step(28);  /* line 28 */
    step(29);  /* line 29 */
    step(30);  /* line 30 */
    step_v2(31);  /* C3 */
    step_v2(32);  /* C3 */
    step_v2(33);  /* C3 */
    step(34);  /* line 34 */
    step(35);  /* line 35 */
    step(36);  /* line 36 */
    step(37);  /* line 37 */
    step(38);  /* line 38 */
    step(39);  /* line 39 */
    step(40);  /* line 40 */
    step_v2(41);  /* C4 */
    step_v2(42);  /* C4 */
    step_v2(43);  /* C4 */
    step(44);  /* line 44 */
    step(45);  /* line 45 */
    step(46);  /* line 46 */
    step(47);  /* line 47 */
    step(48);  /* line 48 */
    step(49);  /* line 49 */
    step(50);  /* line 50 */
    step_v2(51);  /* C5 */
    step_v2(52);  /* C5 */
    step_v2(53);  /* C5 */
    step(54);  /* line 54 */
    step(55);  /* line 55 */
    step(56);  /* line 56 */
    step(57);  /* line 57 */
    step(58);  /* line 58 */
    step(59);  /* line 59 */
    step(60);  /* line 60 */
    step_v2(61);  /* C6 */
    step_v2(62);  /* C6 */
    step_v2(63);  /* C6 */
    step(64);  /* line 64 */
    step(65);  /* line 65 */
    step(66);  /* line 66 */
    step(67);  /* line 67 */
    step(68);  /* line 68 */
    step(69);  /* line 69 */
    step(70);  /* line 70 */
    step_v2(71);  /* C7 */
    step_v2(72);  /* C7 */
    step_v2(73);  /* C7 */
    step(74);  /* line 74 */
    step(75);  /* line 75 */
    step(76);  /* line 76 */
    step(77);  /* line 77 */
    step(78);  /* line 78 */
    step(79);  /* line 79 */
    step(80);  /* line 80 */
    step_v2(81);  /* C8 */
    step_v2(82);  /* C8 */
    step_v2(83);  /* C8 */
    step(84);  /* line 84 */
    step(85);  /* line 85 */
    step(86);  /* line 86 */
    step(87);  /* line 87 */
    step(88);  /* line 88 */
    step(89);  /* line 89 */
    step(90);  /* line 90 */
    step_v2(91);  /* C9 */
    step_v2(92);  /* C9 */
    step_v2(93);  /* C9 */
    step(94);  /* line 94 */
    step(95);  /* line 95 */
    step(96);  /* line 96 */
    step(97);  /* line 97 */
    step(98);  /* line 98 */
    step(99);  /* line 99 */
    step(100);  /* line 100 */
    step_v2(101);  /* C10 */
    step_v2(102);  /* C10 */
    step_v2(103);  /* C10 */
    step(104);  /* line 104 */
    step(105);  /* line 105 */
    step(106);  /* line 106 */
    step(107);  /* line 107 */
    step(108);  /* line 108 */
    step(109);  /* line 109 */
    step(110);  /* line 110 */
    step_v2(111);  /* C11 */
    step_v2(112);  /* C11 */
    step_v2(113);  /* C11 */
    step(114);  /* line 114 */
    step(115);  /* line 115 */
    step(116);  /* line 116 */
    step(117);  /* line 117 */
    step(118);  /* line 118 */
    step(119);  /* line 119 */
    step(120);  /* line 120 */
    step_v2(121);  /* C12 */
    step_v2(122);  /* C12 */
    step_v2(123);  /* C12 */
    step(124);  /* line 124 */
    step(125);  /* line 125 */
    step(126);  /* line 126 */
    step(127);  /* line 127 */
    step(128);  /* line 128 */
    step(129);  /* line 129 */
    step(130);  /* line 130 */
    step_v2(131);  /* C13 */
    step_v2(132);  /* C13 */
    step_v2(133);  /* C13 */
    step(134);  /* line 134 */
    step(135);  /* line 135 */
    step(136);  /* line 136 */
    step(137);  /* line 137 */
    step(138);  /* line 138 */
    step(139);  /* line 139 */
    step(140);  /* line 140 */
    step_v2(141);  /* C14 */
    step_v2(142);  /* C14 */
    step_v2(143);  /* C14 */
    step(144);  /* line 144 */
    step(145);  /* line 145 */
    step(146);  /* line 146 */
    step(147);  /* line 147 */
    step(148);  /* line 148 */
    step(149);  /* line 149 */
    step(150);  /* line 150 */
    step_v2(151);  /* C15 */
    step_v2(152);  /* C15 */
    step_v2(153);  /* C15 */
    step(154);  /* line 154 */
    step(155);  /* line 155 */
    step(156);  /* line 156 */
    step(157);  /* line 157 */
    step(158);  /* line 158 */
    step(159);  /* line 159 */
    step(160);  /* line 160 */
    step_v2(161);  /* C16 */
    step_v2(162);  /* C16 */
    step_v2(163);  /* C16 */
    step(164);  /* line 164 */
    step(165);  /* line 165 */
    step(166);  /* line 166 */
    step(167);  /* line 167 */
    step(168);  /* line 168 */
    step(169);  /* line 169 */
    step(170);  /* line 170 */
    step_v2(171);  /* C17 */
    step_v2(172);  /* C17 */
    step_v2(173);  /* C17 */
    step(174);  /* line 174 */
    step(175);  /* line 175 */
    step(176);  /* line 176 */
    step(177);  /* line 177 */
    step(178);  /* line 178 */
    step(179);  /* line 179 */
    step(180);  /* line 180 */
    step_v2(181);  /* C18 */
    step_v2(182);  /* C18 */
    step_v2(183);  /* C18 */
    step(184);  /* line 184 */
    step(185);  /* line 185 */
    step(186);  /* line 186 */
    step(187);  /* line 187 */
    step(188);  /* line 188 */
    step(189);  /* line 189 */
    step(190);  /* line 190 */
    step_v2(191);  /* C19 */
    step_v2(192);  /* C19 */
    step_v2(193);  /* C19 */
    step(194);  /* line 194 */
    step(195);  /* line 195 */
    step(196);  /* line 196 */
    step(197);  /* line 197 */
    step(198);  /* line 198 */
    step(199);  /* line 199 */
    step(200);  /* line 200 */
    step_v2(201);  /* C20 */
    step_v2(202);  /* C20 */
    step_v2(203);  /* C20 */
    step(204);  /* line 204 */
    step(205);  /* line 205 */
    step(206);  /* line 206 */
    step(207);  /* line 207 */
    step(208);  /* line 208 */
    step(209);  /* line 209 */
    step(210);  /* line 210 */
    step_v2(211);  /* C21 */
    step_v2(212);  /* C21 */
    step_v2(213);  /* C21 */
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
