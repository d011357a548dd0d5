"""Truncated small-v series for the fitted b-weights, with exact rational terms.

Each table entry holds the coefficients of v^0, v^2, ..., v^10 for one of
b_1..b_7 of one PF-D<i> variant.  The constant terms are exactly the classical
weights, so evaluating at v = 0 recovers the classical set; the v^2 terms give
the leading fitted correction (the b_1 slope is -(i+1) times the classical
error constant 152802083671/2853107712000, one factor per flattened
derivative).

These series are the safe evaluation route at small v, where the closed-form
trigonometric quotients lose all significance to cancellation.  Every
coefficient below is cross-checked against an independent solve of the
defining conditions in tests/test_coefficients.py.
"""

from __future__ import annotations

from fractions import Fraction as F

# per variant: 7 rows (b_1..b_7), each a 6-tuple of Fractions for v^0..v^10
TAYLOR_B = {
    0: (
        (F(433489274083, 237758976000), F(-152802083671, 2853107712000),
         F(1000430523577, 291016986624000), F(-69882256253489, 1548210368839680000),
         F(257597135900761, 1532728265151283200000), F(-91527043218239, 3384264009454033305600)),
        (F(-28417333297, 4953312000), F(152802083671, 237758976000),
         F(-1000430523577, 24251415552000), F(69882256253489, 129017530736640000),
         F(-257597135900761, 127727355429273600000), F(91527043218239, 282022000787836108800)),
        (F(930518896733, 39626496000), F(-1680822920381, 475517952000),
         F(11004735759347, 48502831104000), F(-768704818788379, 258035061473280000),
         F(257597135900761, 23223155532595200000), F(-91527043218239, 51276727415970201600)),
        (F(-176930551859, 2971987200), F(1680822920381, 142655385600),
         F(-11004735759347, 14550849331200), F(768704818788379, 77410518441984000),
         F(-257597135900761, 6966946659778560000), F(91527043218239, 15383018224791060480)),
        (F(7854755921, 65228800), F(-1680822920381, 63402393600),
         F(11004735759347, 6467044147200), F(-768704818788379, 34404674863104000),
         F(257597135900761, 3096420737679360000), F(-91527043218239, 6836896988796026880)),
        (F(-146031020287, 825552000), F(1680822920381, 39626496000),
         F(-11004735759347, 4041902592000), F(768704818788379, 21502921789440000),
         F(-257597135900761, 1935262961049600000), F(91527043218239, 4273060617997516800)),
        (F(577045151693, 2830464000), F(-1680822920381, 33965568000),
         F(11004735759347, 3464487936000), F(-768704818788379, 18431075819520000),
         F(257597135900761, 1658796823756800000), F(-91527043218239, 3662623386855014400)),
    ),
    1: (
        (F(433489274083, 237758976000), F(-152802083671, 1426553856000),
         F(680989543811, 116406794649600), F(-125177474703917, 2322315553259520000),
         F(517885739552761, 306545653030256640000), F(-2572884198423151, 211516500590877081600000)),
        (F(-28417333297, 4953312000), F(152802083671, 118879488000),
         F(-1000430523577, 8083805184000), F(161750007895703, 21502921789440000),
         F(-2419392089643157, 6386367771463680000), F(69067938626578009, 5875458349746585600000)),
        (F(930518896733, 39626496000), F(-1680822920381, 237758976000),
         F(851496508169, 923863449600), F(-3109822683210143, 43005843578880000),
         F(17171854137770701, 4644631106519040000), F(-1373640119936290727, 11750916699493171200000)),
        (F(-176930551859, 2971987200), F(1680822920381, 71327692800),
         F(-7685041522471, 2078692761600), F(37302412323393157, 116115777662976000),
         F(-1150037153857349, 69669466597785600), F(5553336881578048313, 10575825029543854080000)),
        (F(7854755921, 65228800), F(-1680822920381, 31701196800),
         F(4465879941727, 479040307200), F(-14651758435060069, 17202337431552000),
         F(5432847035340293, 123856829507174400), F(-2192163846661534231, 1566788893265756160000)),
        (F(-146031020287, 825552000), F(1680822920381, 19813248000),
         F(-855811097959, 53892034560), F(15982331031417479, 10751460894720000),
         F(-436210741712267, 5691949885440000), F(798931592780948369, 326414352763699200000)),
        (F(577045151693, 2830464000), F(-1680822920381, 16982784000),
         F(130969300116257, 6928975872000), F(-49277565690609847, 27646613729280000),
         F(335110207212583, 3645707304960000), F(-7395015266709846197, 2518053578462822400000)),
    ),
    2: (
        (F(433489274083, 237758976000), F(-152802083671, 951035904000),
         F(1404086671901, 194011324416000), F(-108627551857199, 1161157776629760000),
         F(3113473234169, 1621934672117760000), F(-21678565330566029, 282022000787836108800000)),
        (F(-28417333297, 4953312000), F(152802083671, 79252992000),
         F(-1000430523577, 4041902592000), F(3812117933243383, 193526296104960000),
         F(-131666706221101, 133049328572160000), F(766613393985947587, 23501833398986342400000)),
        (F(930518896733, 39626496000), F(-1680822920381, 158505984000),
         F(67397661839051, 32335220736000), F(-47508096701122969, 193526296104960000),
         F(31127602487128507, 1548210368839680000), F(-59333732949165745199, 47003666797972684800000)),
        (F(-176930551859, 2971987200), F(1680822920381, 47551795200),
         F(-855811097959, 97005662208), F(149201016148079837, 116115777662976000),
         F(-407769624909121, 3225438268416000), F(6653867251060213627, 742163159967989760000)),
        (F(7854755921, 65228800), F(-1680822920381, 21134131200),
         F(19713857381587, 862272552960), F(-10823009510563069, 2867056238592000),
         F(83749133157903719, 206428049178624000), F(-189076914789983483663, 6267155573063024640000)),
        (F(-146031020287, 825552000), F(1680822920381, 13208832000),
         F(-26590548293789, 673650432000), F(224945948304809533, 32254382684160000),
         F(-12256588145611, 15672683520000), F(232561853289543390209, 3916972233164390400000)),
        (F(577045151693, 2830464000), F(-1680822920381, 11321856000),
         F(108959828597563, 2309658624000), F(-117725260678970569, 13823306864640000),
         F(35655584375317913, 36862151639040000), F(-248038978837339401007, 3357404771283763200000)),
    ),
    3: (
        (F(433489274083, 237758976000), F(-152802083671, 713276928000),
         F(2211398968549, 291016986624000), F(-33578069009689, 145144722078720000),
         F(-144902264134913, 17516894458871808000), F(-18020995400748499, 14101100039391805440000)),
        (F(-28417333297, 4953312000), F(152802083671, 59439744000),
         F(-1000430523577, 2425141555200), F(66666008116601, 1860829770240000),
         F(-11606680689206023, 6386367771463680000), F(363627917613911087, 5875458349746585600000)),
        (F(930518896733, 39626496000), F(-1680822920381, 118879488000),
         F(180183513998459, 48502831104000), F(-6773330550886447, 12095393506560000),
         F(8117004168919561, 142911726354432000), F(-9618739589821913801, 2350183339898634240000)),
        (F(-176930551859, 2971987200), F(1680822920381, 35663846400),
         F(-117366928934503, 7275424665600), F(9440045489117267, 2902894441574400),
         F(-154456853448146527, 348347332988928000), F(156768697509684951877, 3525275009847951360000)),
        (F(7854755921, 65228800), F(-1680822920381, 15850598400),
         F(21053722246547, 497464934400), F(-86689543640365, 8601168715776),
         F(153981351646932977, 95274484236288000), F(-98146042038903700999, 522262964421918720000)),
        (F(-146031020287, 825552000), F(1680822920381, 9906624000),
         F(-148538554003387, 2020951296000), F(77089257945806723, 4031797835520000),
         F(-9226172386459001, 2764661372928000), F(16273137531259548461, 39169722331643904000)),
        (F(577045151693, 2830464000), F(-1680822920381, 8491392000),
         F(60974002854799, 692897587200), F(-20335903756276117, 863956679040000),
         F(2799280124854146809, 663518729502720000), F(-449833739846395057357, 839351192820940800000)),
    ),
    4: (
        (F(433489274083, 237758976000), F(-152802083671, 570621542400),
         F(7762618237, 1119296102400), F(-7881601960439, 14744860655616000),
         F(-27284304529514897, 613091306060513280000), F(-1799866965050155021, 282022000787836108800000)),
        (F(-28417333297, 4953312000), F(152802083671, 47551795200),
         F(-1000430523577, 1616761036800), F(604487352966331, 11058645491712000),
         F(-75851624289432059, 25545471085854720000), F(646544241473169703, 7833944466328780800000)),
        (F(930518896733, 39626496000), F(-1680822920381, 95103590400),
         F(2349705253321, 404190259200), F(-23296554826706981, 22117290983424000),
         F(58594320744987337, 488908537528320000), F(-144079291878124208197, 15667888932657561600000)),
        (F(-176930551859, 2971987200), F(1680822920381, 28531077120),
         F(-74576374036553, 2910169866240), F(95021198062331, 14455745740800),
         F(-1557322122991096859, 1393389331955712000), F(1918393406379510690887, 14101100039391805440000)),
        (F(7854755921, 65228800), F(-1680822920381, 12680478720),
         F(7297045929049, 107784069120), F(-20692039318485463, 982990710374400),
         F(5526609376838648143, 1238568295071744000), F(-4320389579215898805647, 6267155573063024640000)),
        (F(-146031020287, 825552000), F(1680822920381, 7925299200),
         F(-1177252560689, 9980006400), F(74732313119187721, 1843107581952000),
         F(-3727799369309648939, 387052592209920000), F(6574125730067577575911, 3916972233164390400000)),
        (F(577045151693, 2830464000), F(-1680822920381, 6793113600),
         F(12244386604777, 86612198400), F(-26404757298856247, 526602166272000),
         F(8187780819568609243, 663518729502720000), F(-7493224716658621457999, 3357404771283763200000)),
    ),
    5: (
        (F(433489274083, 237758976000), F(-152802083671, 475517952000),
         F(1017850218043, 194011324416000), F(-355108221471443, 331759364751360000),
         F(-131687699860605701, 1021818843434188800000), F(-970130052388059581, 47003666797972684800000)),
        (F(-28417333297, 4953312000), F(152802083671, 39626496000),
         F(-1000430523577, 1154829312000), F(2072463900685193, 27646613729280000),
         F(-4147730814505219, 886995523814400000), F(25097056509899527, 559567461880627200000)),
        (F(930518896733, 39626496000), F(-1680822920381, 79252992000),
         F(270959894639173, 32335220736000), F(-97479391651340473, 55293227458560000),
         F(1103582448711358933, 5160701229465600000), F(-135427504564083230351, 7833944466328780800000)),
        (F(-176930551859, 2971987200), F(1680822920381, 23775897600),
         F(-180938567211709, 4850283110400), F(192417404089068163, 16587968237568000),
         F(-13040661300795157, 5582489310720000), F(753690800700831259867, 2350183339898634240000)),
        (F(7854755921, 65228800), F(-1680822920381, 10567065600),
         F(60974002854799, 615908966400), F(-31108033258478857, 819158925312000),
         F(20614799744422537499, 2064280491786240000), F(-283489566000723918761, 149217989834833920000)),
        (F(-146031020287, 825552000), F(1680822920381, 6604416000),
         F(-232891275659849, 1347300864000), F(340402048152771923, 4607768954880000),
         F(-1791871329414738589, 80635956710400000), F(3257163476890690029371, 652828705527398400000)),
        (F(577045151693, 2830464000), F(-1680822920381, 5660928000),
         F(478770728431733, 2309658624000), F(-361861433042278873, 3949516247040000),
         F(31765434645249520399, 1105864549171200000), F(-3797117763219719452879, 559567461880627200000)),
    ),
    6: (
        (F(433489274083, 237758976000), F(-152802083671, 407586816000),
         F(42107584279, 16629542092800), F(-48644589686717, 25519951134720000),
         F(-8465930460350551, 29194824098119680000), F(-1588162811844063649, 30216642941553868800000)),
        (F(-28417333297, 4953312000), F(152802083671, 33965568000),
         F(-1000430523577, 866121984000), F(1319911328641663, 13823306864640000),
         F(-633679429758461, 86889357434880000), F(-13749338388459469, 91565584671375360000)),
        (F(930518896733, 39626496000), F(-1680822920381, 67931136000),
         F(2433446807381, 213199257600), F(-150750689506359931, 55293227458560000),
         F(151232830491144629, 442345819668480000), F(-11391719790424784543, 387392858225049600000)),
        (F(-176930551859, 2971987200), F(1680822920381, 20379340800),
         F(-26590548293789, 519673190400), F(154953352570753493, 8293984118784000),
         F(-143381346778111763, 33175936475136000), F(1938525891219194555527, 3021664294155386880000)),
        (F(7854755921, 65228800), F(-1680822920381, 9057484800),
         F(251688917686417, 1847726899200), F(-8983100481771361, 144557457408000),
         F(289598383359113, 14860025856000), F(-2936244786853000878251, 671480954256752640000)),
        (F(-146031020287, 825552000), F(1680822920381, 5660928000),
         F(-3438345456101, 14435366400), F(280448198337422053, 2303884477440000),
         F(-408566151907529191, 9215537909760000), F(10234561211810943225223, 839351192820940800000)),
        (F(577045151693, 2830464000), F(-1680822920381, 4852224000),
         F(282860542755301, 989853696000), F(-45957876214170247, 303808942080000),
         F(1822061164406572133, 31596129976320000), F(-1213351274004131872663, 71944387956080640000)),
    ),
}
