// @generated by oracle/tables.py (mpmath, 50 digits). Do not edit.

pub const GAMMA: [((f64, f64), (f64, f64)); 60] = [
    ((16.15936367391459, -11.760910174472286), (-11056038757.763211, -32671780250.38946)),
    ((-0.7417781993115611, 12.478429996392528), (-8.9431535231732647e-11, -3.2242269433099884e-10)),
    ((-17.92817749704985, 4.2915810389058215), (5.5876555722067043e-22, -2.7132831185471583e-21)),
    ((0.9816743454605898, -3.0214720098674483), (0.018403638980995136, -0.032188317931568304)),
    ((-4.065968593019516, 5.9516532039481795), (-2.4353469875213437e-8, 3.5748916843359465e-8)),
    ((18.73218468554176, 5.1169486974725125), (-1021207098355617.8, 1022966087915196.1)),
    ((12.894665547307376, 11.298744627515632), (-446170.46754241601, -3657977.8726257562)),
    ((-0.09126053170362525, 13.748231599812165), (-1.7774958775465008e-10, 1.3371046155385931e-10)),
    ((-8.924009758189783, -5.799788792293338), (-1.1497137093474763e-12, -7.1337713178146159e-13)),
    ((16.77537971942632, -8.968585765900233), (1006816868113.968, -317223990884.36109)),
    ((-4.257014990821315, 13.560125365219527), (3.1131286400859107e-15, 4.2529335171253826e-15)),
    ((1.4682119722971692, -2.9169982783520183), (-0.00080104031375580761, -0.073260779406612664)),
    ((15.059942793087664, 5.692686705244732), (-32786557974.408898, 10922880637.303449)),
    ((6.247036497187853, -0.14231403736610915), (177.91741264217684, -45.250791081060733)),
    ((-2.302967319080004, 14.82851439520271), (-7.2341366860574548e-15, 9.8306369781545038e-14)),
    ((17.347083626116316, 2.394947142908862), (41400226074438.834, 22025690922830.211)),
    ((3.2056887195589674, 8.259392508921842), (0.0016730955041795285, 0.00077093446811050228)),
    ((-4.689230187156657, 16.680847634943014), (-3.4354162301493023e-18, 2.7289803094687634e-18)),
    ((8.418168084176592, -14.303661496848047), (-0.80194151113876182, -0.39487666424658022)),
    ((-7.598520522876916, -18.217580772695882), (1.0176453786185825e-23, -4.391546771628994e-23)),
    ((0.5511279667900268, -5.757458409482981), (-9.6954918894670058e-5, 0.00030893140747465464)),
    ((-10.149012780844119, 4.385784836899187), (-1.7215412090835129e-12, 2.5108063113167584e-12)),
    ((-1.7701963024598157, 8.76800307210651), (1.8321008720924405e-8, 2.4482494394552383e-9)),
    ((-7.986178375468956, -17.971605345251096), (2.280260111782043e-23, 3.8706763319222405e-24)),
    ((8.568937731570951, -7.736702604187114), (-102.23315263393593, 600.50016604964179)),
    ((-9.97733401894129, 4.962049083084331), (-5.9270754742314218e-13, -7.5973994860218772e-13)),
    ((-2.228709169798293, 13.350485737499525), (-9.0883694616464568e-13, -1.3545653887766758e-12)),
    ((-9.09364613944028, 10.069368753904513), (2.361001406809496e-17, 8.6382648557401233e-18)),
    ((9.657986925623451, 14.444894282320007), (-8.6395503000960215, -23.855719409482277)),
    ((2.952486308422486, 15.545615325368033), (4.1985615328222432e-8, -3.162060019837773e-8)),
    ((4.0240324302954456, -14.645222714238141), (-2.1243071855168735e-7, 3.3855381355844362e-6)),
    ((-4.105146435578471, -0.9704793415871968), (0.010749801969036779, 0.0046915414366953644)),
    ((-15.16120505023105, -12.03393116296979), (-6.6424136366366514e-27, 4.8877805235647512e-27)),
    ((-3.8439358424886745, -5.719380038352819), (-6.6378086638181457e-8, -9.1280923077164291e-8)),
    ((-6.052001495424337, -17.644273505369846), (-1.2092303299287444e-20, -6.1252948113535247e-21)),
    ((-12.405402004780179, 0.004207833847125642), (-2.446990129783608e-9, -3.624615350642747e-11)),
    ((-7.9094604661032015, -6.765342380552367), (5.1275563109864999e-13, -1.2291960918975255e-12)),
    ((16.3078306278626, 6.674888268775369), (754069128812.26155, -179734964779.77846)),
    ((3.5221248983943774, 2.4500344251461748), (-1.357206629485955, 0.27186703116310482)),
    ((-9.5784692352516, -7.328604153301301), (-1.5335068165458806e-16, 5.4652623841211701e-15)),
    ((-4.1524842634758095, 12.455235470820785), (-1.1012934751954414e-14, -5.6683523813150853e-14)),
    ((2.6154928835224602, 12.97840342158922), (-9.482172487238832e-8, -7.9642810476861796e-7)),
    ((-17.533016655536933, 5.192736207348467), (-4.9156648016982017e-22, 4.333815009216711e-22)),
    ((17.765805769675772, -5.099845113362935), (-38806014172216.05, -77572443119767.104)),
    ((12.187419608764365, 12.978279405251179), (-106778.41669880172, 76727.8455544004)),
    ((-7.933196219537551, 13.315567116039887), (2.6012998984906744e-19, -3.184869221810008e-19)),
    ((4.389962242502374, 10.78373509628959), (0.00016532262167005427, 0.001232734793820978)),
    ((-4.694451219626549, -12.92534766799766), (-9.2927060422021453e-17, 5.6321476669776923e-15)),
    ((11.111080770057221, 16.214693419119236), (-12.561692828551136, -294.26903546038575)),
    ((8.034445836326078, -5.5850287513076236), (532.99222568013916, 595.64555365806904)),
    ((-17.26462355158611, 2.668053753193888), (-1.2514256232196135e-18, 1.9424158720977154e-18)),
    ((-12.676203200752266, 6.608840122707978), (5.60799544635201e-18, 9.5198160858206307e-18)),
    ((-5.203810796411785, -4.604666382887711), (-1.044161630800716e-7, -5.0982974721889512e-9)),
    ((-3.1697532261161925, 6.797598707323431), (3.8518656341017365e-8, -1.9884295359871789e-8)),
    ((7.281380926666088, -14.845077960972713), (-0.020149873807796843, -0.0040865194568635674)),
    ((15.695621290383727, 1.1559087358686426), (-545001382264.80351, -2705152828.6860941)),
    ((3.8906234765823804, 4.7972343534419295), (0.27489486538780365, 0.21303767083893811)),
    ((-3.845026333963485, -17.294694490618703), (1.4047985182753979e-17, 7.5605838538521301e-18)),
    ((-11.086740649784451, -15.483397098375292), (1.1169134564651733e-26, 4.4005738768364838e-25)),
    ((-17.05715321337871, -7.575279180600079), (-8.0526444037645666e-25, 3.2876700407736886e-24)),
];

pub const LOG_GAMMA: [((f64, f64), (f64, f64)); 40] = [
    ((5.681911765016039, -31.555800520293058), (-30.739202296571614, -85.084602014077374)),
    ((12.632523430187064, 3.5512263313018337), (18.552143970853501, 8.9138502457033045)),
    ((31.36064226542686, -19.490164937735575), (70.093868321388435, -68.006376246999337)),
    ((-16.512214217464926, -28.56602636834163), (-101.89412711540043, -35.669744577639754)),
    ((7.042754678091875, -22.24228729626974), (-13.632074422008333, -56.083358538811364)),
    ((21.974862054151494, 6.237736144453365), (44.409577327073493, 19.216505677670638)),
    ((-19.77194822857153, 2.4723960457525465), (-47.427070900583068, -56.239826089672159)),
    ((23.224779036791226, -15.61233162328179), (44.167662286009981, -49.85036271151571)),
    ((-20.9974153946321, -37.22992134794058), (-136.41082302040948, -57.766850982863024)),
    ((32.36669439618474, -15.28056689901053), (75.824947785481227, -53.444231893148898)),
    ((28.361799418095863, 3.0702442855441774), (65.590193599230206, 10.221844382764119)),
    ((-8.127970142289058, 27.767820053063275), (-71.511530777037692, 49.657947640915851)),
    ((-11.379724944631416, 5.957089347184066), (-33.877061210277769, -22.344258356437744)),
    ((6.0107240888525055, -10.090685446924532), (-1.9421616150635734, -20.456800044100325)),
    ((38.269930336697804, 5.486207164230009), (99.912876476918998, 19.94256206511644)),
    ((-2.0898424155238047, -9.163113777303824), (-19.243922416495023, -6.7097156547282344)),
    ((-6.311672463100784, -5.885875459565845), (-21.531099263227743, 9.494118368532445)),
    ((25.1011529405908, 6.050235964822264), (54.37194412375494, 19.437961546164629)),
    ((24.372041355049916, 29.384218645245724), (37.685219073006162, 98.60617343306748)),
    ((25.61263526860479, 33.55438087931614), (38.466375405824348, 115.10281652444321)),
    ((28.77659492549681, 17.733546408474893), (61.898796157785602, 60.31307743246477)),
    ((-2.4475594758429615, -31.351707027110855), (-58.487549056911482, -71.896294883058919)),
    ((38.608909226963895, -5.656002618496117), (101.12427003322503, -20.611171550473757)),
    ((27.0411895086854, 27.867109229437418), (48.69295467776322, 95.347387528217083)),
    ((33.33181323578127, -21.711428257860675), (75.984998629630736, -77.21327007870867)),
    ((8.541385764757784, -13.768421865888154), (0.79452613407805248, -32.740989656956789)),
    ((18.968458712365297, -1.527632963798034), (36.240345508844916, -4.4565996890869708)),
    ((-5.16885724669638, -11.749006919226659), (-31.707817240436579, -6.9771445631607121)),
    ((-21.775142678494227, 20.934682882672895), (-102.96077694014984, -2.5130203305745459)),
    ((-13.270993099343737, -26.755292174710714), (-86.934108687809777, -36.149939775406355)),
    ((33.1903168262886, -39.33946332889025), (62.337933948430059, -144.13612944245843)),
    ((-1.6575795200535666, 8.651376113700387), (-17.346887340508261, 6.364956779512544)),
    ((30.276448203163525, -8.636247537519736), (70.958641854279247, -29.427503553440058)),
    ((-11.77652529511707, 25.787251540346162), (-79.919401483058784, 35.914827450472549)),
    ((26.829690521705047, -26.908267297570447), (48.693235864876082, -91.688059257875181)),
    ((13.112066800361816, 14.537244700688419), (13.156291288720157, 39.253510806057872)),
    ((34.35192812215716, -2.882071071978764), (86.16960402599932, -10.1542208816749)),
    ((-9.304532512237804, 21.788571210262106), (-63.829815452966766, 27.814135398229299)),
    ((12.583383982359763, -15.903311900813595), (10.368836278710226, -42.848395067841582)),
    ((-11.381283831359536, 9.49107494767722), (-42.955273439141337, -12.975006979735895)),
];

/// (a, b, c, z, 2F1)
pub const HYP2F1: [((f64, f64), (f64, f64), (f64, f64), f64, (f64, f64)); 60] = [
    ((4.043973165849067, 0.845536323861122), (-7.447288175831435, -5.17115880607235), (4.117068450483272, 1.4182571046644554), 0.9838261734762237, (0.00027036305105071573, -0.00036513519991018544)),
    ((1.5784600266716744, 0.41375156139327807), (-7.277641711910231, -7.794485015675122), (5.090576394873087, 5.883561209480071), 0.33623696378709883, (0.52046558980358962, -0.059160972945445476)),
    ((1.5598208477790791, -4.592577137296974), (-8.208657240913077, 3.4328159939957814), (5.6034767564997, 4.417912378966175), 0.6092235021226018, (-3.4810751675824618, 4.9593057851659722)),
    ((4.096389822090819, -5.847679816135344), (-0.14225956109309656, -3.646433194446205), (2.560977317882956, -3.6770187255082094), 0.6636677637054906, (1.6221686699540035, -0.52458651738047688)),
    ((5.28246894325123, 4.079694507297017), (5.568427228717637, -7.883927943814943), (1.920429328929179, -0.6655807648890439), 0.9999621466115612, (1.1789200175843706e+43, 5.7663901232142444e+42)),
    ((-1.1674728349650216, -2.0863342310038853), (4.948775767868897, 5.127788717431022), (4.444418324716381, -5.848977464852629), 0.6428938591395676, (4.0148341975931577, -0.96430017044954898)),
    ((-4.180603581713294, -5.8968521720181695), (2.480735221647251, 1.4019958796973935), (2.4285014439910686, 0.398856111224279), 0.9999989834693719, (0.051652352337815303, -0.019435207797467551)),
    ((6.194034852351171, -5.097841561728366), (0.7618785514654238, -8.165380155827847), (5.8873979088918285, -4.7343900298542225), 0.9994732546121657, (-653.5810536129217, -2385.8674197889667)),
    ((5.436369940931364, -5.641114927468979), (-3.115775874517338, -7.648365435780113), (3.686837343767875, 1.1944082873433608), 0.542449929086057, (-0.0075064813339751867, -0.010436635392382645)),
    ((-2.2347736464909636, 3.5575005921368987), (-4.930095855528185, 1.4738055283163298), (0.9292532673614775, 5.317200168028759), 0.9999937689226944, (-0.16434863986625321, 0.12132044321109351)),
    ((2.2740741325904192, -0.04302521572925144), (-6.528347550348153, -2.3051852385569394), (3.3585887154993825, -5.70673458045844), 0.22425834057375216, (0.76904069378955707, -0.42596476754119415)),
    ((2.5218800294906742, -5.956884849578158), (5.188157003244129, -4.791679733567969), (5.691651930432308, -1.569903303785269), 0.9999727546188377, (-106388075.4483055, -51744116.772278722)),
    ((-7.314022404646716, -5.820493123215663), (8.416224093819448, 4.652772121935044), (1.975448066717623, -5.89743552179781), 0.8446543117894131, (1161.7457239604657, -1217.9220080837979)),
    ((-3.196216438545526, 5.34012921096018), (-8.040652164307316, -1.318883988969417), (4.6606300396337454, 4.7456500066006875), 0.8950356583071434, (-1.7894140548774303, 5.5311873743228955)),
    ((-3.050606414404852, 1.3942975379507025), (-0.5608747689981461, -3.151885709760238), (0.5643351996836586, 5.503529974196532), 0.20175210398590543, (1.3881266981559091, -0.22569978026393088)),
    ((4.373502147291507, 3.2522667063220307), (3.5410539772886747, 5.734835713179139), (0.4055405063453532, 2.3987681238962413), 0.10682556331140652, (3.8648915070050448, 2.5620575504208494)),
    ((7.034131473018416, 4.63932059213643), (-5.435262167549592, 8.103333424058384), (5.417121357844556, -1.2106312014676748), 0.9999647197847285, (0.00053131846830875478, 0.00015617842710699736)),
    ((3.5804169655729474, 5.726371891641191), (-8.42239058079558, 3.141875016711051), (5.637358994193159, -2.2850648073740967), 0.9424427019773094, (0.32510829908648919, 0.19479219636546706)),
    ((-3.347354053792179, 5.857728858329084), (1.3906118141475776, 6.196548423565966), (2.44880469637449, -4.126012395191195), 0.9999479878648891, (-0.4317805563789073, 0.92174342822924957)),
    ((7.482648139858441, -5.004192227088714), (-0.07306931740119538, 0.2795714692227804), (5.563978925795369, 5.954752754286089), 0.21551648464026701, (1.069417745240511, 0.022323241350111837)),
    ((-6.2378077063460005, -0.7165134231568402), (-3.11535985774551, -6.692853637358825), (3.830819035449078, -5.802653107741057), 0.7075858157869968, (-0.28568257191574932, -0.61831900597618274)),
    ((0.1312703238658699, 2.951155429071296), (0.16269696359671215, -1.644355471356568), (5.2487548013625185, -5.069104041855962), 0.16134609144429446, (1.0718216926148087, 0.086028145942113171)),
    ((6.113692103875078, -2.530124370774816), (4.630394790174554, 3.8847097405184936), (4.238486257384349, 1.5272478437182002), 0.5794191734028585, (947.18692713469893, -98.638387815906951)),
    ((-3.92357153740012, 1.9468625714917902), (3.9633624426401806, 0.4812749304245578), (0.6106679962683379, -4.0645040505029755), 0.7950418552984998, (-0.31555604558988395, -0.29024702574624595)),
    ((0.6621431358009726, 3.929813022321195), (-6.261321730192824, 5.667426279017107), (0.3482785644337286, -5.915719091667437), 0.4010770074598488, (0.35008895152319202, -2.2356468131604858)),
    ((-7.360035607253355, -7.639837801522701), (-0.14624510400085633, -6.465329564681056), (4.861821214646638, -1.9609787492958581), 0.09675210436552578, (0.23503543794028841, 0.21385123855294395)),
    ((5.856654900014146, 5.6415068817860945), (-1.8503091335081105, -5.807114384269025), (4.425479574227614, 1.695527225237293), 0.626779089801011, (29.645370399489486, -9.3215950786045035)),
    ((7.136829308565519, -8.028722333069933), (-0.6878491642525342, 7.063745806510337), (5.772093514657506, -2.7794155110527146), 0.6540921281870651, (170.97630812806616, 266.62144589109641)),
    ((3.6890908896114247, -5.392228110941906), (-2.3893867941021973, -5.260982700299382), (5.736083465750591, 0.09906604029132104), 0.14155278953621758, (0.36116158723559433, -0.0098654999602236132)),
    ((4.678687078366725, -7.143227336293807), (-0.8632521709906218, 6.660318395174459), (0.6382775422075019, 0.6515119345504079), 0.999865305478697, (-3.6949879834233384e+18, 6.58006707839943e+17)),
    ((-2.380187493813086, 7.916254089156329), (6.611342582625019, -6.999213576814616), (1.5966201042105665, -5.644952592048098), 0.9974135506502635, (-163320409.68616844, 197597155.05516837)),
    ((-2.6654942407042643, 3.134448987211611), (-2.490118844782643, -2.445513872183941), (0.42560169563221273, 3.703184774258421), 0.9984112640230953, (-5.8287055767378236, -2.0713981378653136)),
    ((-1.17891258107234, -3.1859929043966826), (1.4734062923604618, 4.710756584277673), (0.70709900097638, 5.379740481644209), 0.889614043872828, (-0.076264742706015535, -0.016450500394361246)),
    ((-4.093470052188408, 7.569429661541609), (-3.0154299713083494, 3.638630687603664), (1.8656902571170944, 1.2736160701652022), 0.48023174857463435, (0.40375435811479282, 0.9661550996935697)),
    ((-5.178362886536094, 8.356737410029226), (7.2043239109545905, -2.0897478218069843), (0.8914985048776438, 0.527507856242309), 0.7688543323451759, (3481.0973137164612, -24207.472394418097)),
    ((-3.2100650464705245, -3.323156327214286), (4.491558071917636, 8.323937381523404), (3.187632748663208, 2.8513179599456073), 0.9999336368164188, (-563.63978514250078, -145.24040338415341)),
    ((-4.0254954975533925, -3.806102664696094), (-4.030637629049997, 8.058237418433439), (3.93823737748183, -4.6744592220213494), 0.5203437521947627, (7.7637655824377851, 16.563592538105836)),
    ((-2.0577446249394002, 5.295454864307242), (-4.068247649292597, -1.0977258358409738), (2.8268062415764175, -2.438329282611088), 0.7750452920646511, (12.491180256987851, -11.341719063478798)),
    ((-7.4030200579350085, 7.903106899302767), (5.6619762468634445, 4.870481521608378), (1.7094033498156718, -0.5951559672199549), 0.4040292958173783, (0.037694170860717939, -0.027242220346355973)),
    ((4.811857520677579, -6.225706454014238), (1.6516648264466678, 0.18434596841395923), (4.543006286521602, -1.132055244275989), 0.3105612885523372, (1.8060891812295429, -1.3691235703825287)),
    ((-0.7057250391249905, 3.529282527831139), (0.9434815430512451, -4.532016145347054), (2.9229280975629472, -2.65677029686444), 0.6344197267132868, (-3.9578221237468438, 4.4743207478209023)),
    ((1.1222342725514718, 6.513265664035803), (-4.607087390398611, 7.476017609526133), (5.296819394700725, -5.827141300681538), 0.09668849444552441, (0.67144303952910883, -0.4900274361673993)),
    ((-5.461019918123746, -3.509435399896968), (-4.285265224788409, -5.545509785515229), (3.6803601196998987, -4.434052995270209), 0.10954396176882175, (0.42814097112102007, 0.37538157649644295)),
    ((-4.571830562721009, 3.3874862639003993), (7.7889536512906865, 6.246717826355173), (3.0124455820251583, -2.678389519199295), 0.9348671782131581, (0.2818465306549951, -0.12417800224158927)),
    ((-0.6549606340119336, 7.135153334265073), (6.401500034804677, -3.8487009414049655), (1.4225315577707467, -0.4868951307027167), 0.9999933580126753, (-9.4968175883994545e+25, 9.2174433012475398e+25)),
    ((-7.792765897260429, -0.06156715191408679), (0.17122508958723337, -1.8141744428605566), (2.6773369143080195, 5.974784749547805), 0.9989363958691805, (1.4887506219565368, 2.6479108368625981)),
    ((0.3393972352699386, 6.644308271590454), (-6.001791657655218, 1.2523958591506013), (3.0002519729075883, -4.969930366931196), 0.700404913169417, (-5.2543100400195043, -6.9298237004766371)),
    ((0.7653788772456949, -8.026658854662674), (5.083323773308134, -0.6559115637185373), (3.2960863198733574, -4.795365834361277), 0.3016445778097905, (0.34338674859113932, -6.4533293244832302)),
    ((0.690342826999558, 6.339665349537569), (5.391908929942616, 7.239084347014849), (1.1518254335977816, -0.6524657102752984), 0.9998940202299712, (-1.7695431616596994e+19, 4.1278983461205101e+17)),
    ((-0.3204128722828461, 0.30425504991015373), (-4.787980272622326, -4.180071787398973), (5.0575187459582915, 5.8856101350259), 0.9999179005020004, (1.1637688068505085, -0.24960031721673819)),
    ((2.4243621636669683, -6.266729714724278), (0.248758896626045, -7.489151271765303), (3.1034773846448385, 0.5846929170125534), 0.9997987942215282, (0.0062979026779162809, -0.0058596709875693093)),
    ((6.228589395922878, 7.438832364360788), (5.392481039719309, -7.0947181047360655), (3.9938397676129003, 2.865339250510221), 0.9802558219571149, (11101109787548970.0, -203429458263239.1)),
    ((-8.173448919136677, 2.708816903428488), (-3.3837555274381312, -3.660205288657867), (4.966378048059923, -4.634266187402295), 0.8571429631872329, (-8.5504184041007987, 2.0458014403184596)),
    ((4.80570207053573, 7.156021438190534), (-1.5354862092420536, -5.119216703473423), (5.796815937740985, 4.0824934438848395), 0.5643076919749102, (-1.4886985865443205, 3.7471861574221262)),
    ((-2.7121929901532535, 6.907988666823707), (1.4424904054866854, -6.5098885549612735), (4.168155941484834, 3.0509749203235863), 0.6341475256655076, (127.58010421365644, 52.189112798644996)),
    ((5.848479873589563, -1.3046221552302537), (5.97908798845218, 0.03732150985884353), (2.3222578209827134, -0.2638668798318111), 0.47570398752111076, (1719.9147200170299, -1744.5882838250431)),
    ((-0.9676713650654767, 3.197476796861741), (-2.261687520038617, -3.0113503425085497), (1.758484709805498, 2.610700782207413), 0.6535105987850107, (-1.3736949786692236, -3.0314698129845185)),
    ((1.9383626205262185, -1.0662816468292124), (3.855972500696943, -6.3422261157646815), (5.507798205233647, 3.520034844083961), 0.7177704063492526, (0.1482681674588289, -0.16973257746845798)),
    ((1.7002761208810266, 2.7410710484151277), (4.123795441877318, -0.009191634909068824), (0.20019376616054047, 1.0923539880318547), 0.6855311787517827, (1903.7945820939347, 9201.0999278858101)),
    ((-2.4167097859249065, 2.721813483529992), (-2.7399970363887256, -1.3994889691785453), (5.898387173973049, -1.0842722213826868), 0.4732443642528934, (2.0675595243485347, -0.26757904271920549)),
];

/// (nu, q, x, P, Q) for conical degree -1/2 + i nu
pub const CONICAL: [(f64, f64, f64, (f64, f64), (f64, f64)); 40] = [
    (2.3533114692569965, 1.0069675383965304, -0.09715889591804017, (9.3746718064153693, 10.132616770400304), (15.916790712950158, -14.725138386882256)),
    (-3.800579277904835, -2.72951180367507, 0.589336691059286, (-25.226621800912068, 14.275937326193904), (-22.424591876777428, -39.625884460161992)),
    (-3.4066905134234373, -1.811644931647769, -0.5233661757301349, (-132.11006035574508, -217.05289452739831), (340.94588767361738, -207.51800006057643)),
    (-2.916036952297828, -1.3003297988735998, 0.9940850114482075, (-2.49094264348827, 1.1005821667418675), (-1.7278984047045288, -3.9165161648026362)),
    (-1.0663205865171466, -3.648030379220292, 0.645148442143258, (-0.90794808267095221, 65.337549805764936), (-102.63192237887809, -1.4261561989644316)),
    (0.8936762519379924, 3.722550354152114, 0.9296687930474451, (-17.969099446451556, 69.498276151323266), (109.16755893816418, 28.22587785364418)),
    (3.673004907206945, 2.8129981356045377, -0.15546827289099763, (-121.45970204512096, -20.472835721140538), (-32.158655422155308, 190.78845376638706)),
    (3.9124206614341546, 4.524122949247101, -0.035815620725079156, (98.496050116809961, -329.12849676122356), (-516.99383375467452, -154.71723373024399)),
    (0.7597275503488845, 4.551363349409952, -0.5028453655264431, (178.10796075374452, 160.71051455768861), (252.4435210169233, -279.77135495364743)),
    (3.0225520495756246, -4.682367958262419, -0.8495667697799603, (257.44376395474265, 147.31604472010609), (-236.44756885095088, 403.91397241121939)),
    (-4.834030271199104, 4.215101077902762, 0.522800090885695, (218.62659441750408, 45.048187550418305), (670.68082960860068, 5.8739265379031848)),
    (-0.4631421577275283, -2.472045882684509, 0.6798118907374419, (-10.617479289436601, -6.4940508988540566), (10.201611456505266, -16.674114257767758)),
    (-4.917488542852056, -1.2770928805538642, -0.21599688494171543, (-507.25700323541793, -1060.0472324224248), (1665.1182981949519, -796.79743893452411)),
    (-2.435140633457377, 1.5670091384204357, 0.38663455067958685, (1.5014738296720106, 7.4844082868922716), (-9.8216251861826759, 7.9878800007410207)),
    (-2.729929949090053, -4.3768237317186856, 0.6767382544945401, (176.23019695321378, -85.553595807886256), (134.38727411909272, 276.82174595024864)),
    (4.420956143339593, -1.874708092942301, 0.737997709148089, (-11.5199304624259, -3.977056097333365), (-12.333346055170497, 15.380738236684012)),
    (-4.149908710366679, 3.4136698803944956, -0.3511119840465168, (-155.30925987502007, -389.01874618253007), (594.25775672524291, -267.97533843447911)),
    (-3.078899348605445, -0.7725459965626644, 0.0622505604544209, (16.043651346571752, -18.534927297491253), (29.114999454829427, 25.200842417015252)),
    (-1.1020819628929956, 0.37, -0.4481883828951505, (3.8066625268123959, 0.11566306975036506), (0.32748907495786922, 5.9196484575995593)),
    (4.2142528526265455, 3.7153972233879937, -0.381308066817025, (-30.648968413915457, -470.29280293562043), (-738.73420736753124, 48.143286998996505)),
    (2.032155543526036, -0.3692397814708297, -0.5232334564223396, (21.192623708750396, -5.5471326950894927), (-8.6691669993566675, -33.299730840601321)),
    (4.791220714977625, 1.0454153633530687, -0.7221638142493505, (-974.27979493958066, 17158.951597087063), (26953.218140333412, 1530.3951235153706)),
    (-4.461579299095842, 2.298015175384154, 0.0522179814474103, (-184.1903629278625, -33.201305924303982), (51.19504358985908, -289.49694002909453)),
    (-3.0116407652582353, 3.56185870262688, 0.21103817548516035, (-68.446102189383172, -33.839686885197196), (-94.603786871465437, 113.86091108320729)),
    (-0.06656609497495136, 0.48701261443008015, -0.866821192021665, (1.5034897683690349, -0.92355747307069781), (-0.38466735543807034, -1.6679306819089659)),
    (-3.3864192914569946, -3.171584098321536, -0.7234230446050398, (-160.39452817718861, -8.226277952285414), (12.921807180928269, -251.94713556245739)),
    (-4.6486774479555235, 3.902683005912319, -0.05913355303998746, (280.89288805254806, -349.11217796992056), (604.39284495272077, 355.41564357670484)),
    (4.502508297458492, 2.1069711966894475, -0.6859170157959218, (-5115.8540880682527, 305.06051052010879), (479.18792932093017, 8035.9648099553288)),
    (-4.311297045469401, -3.3370557399289726, -0.5999458103409241, (-326.78895042265725, 1154.5912843419619), (-1813.6277483924468, -513.31888295382357)),
    (0.8547947759617882, -0.3795638645562871, -0.1883604654771106, (2.1527945349169877, 0.059318761062753505), (1.2111489459919838, -3.0832951660372723)),
    (2.11349727660682, 0.37, -0.36393710973567284, (16.449907290085719, 4.5821554726002189), (7.2023862269468948, -25.838079861250844)),
    (-2.0020313068654536, -0.46157997190193, -0.2383575140709332, (10.275390860070608, -3.3187247540016128), (5.2187650703471807, 16.138642294814639)),
    (-1.8676875042509664, -0.20075280942890394, 0.3944211619182062, (2.8559522197551707, -0.37464474144616144), (0.64523860610882608, 4.4790891853583027)),
    (-3.4445290593166566, -4.763508649789646, 0.41312504408247464, (375.36685684492454, -11.056350629526336), (17.367274949429104, 589.62487993467414)),
    (1.7090983966896447, 0.33375537278090395, 0.1491353794519844, (3.6359891226026995, 0.66428955259438271), (1.0733970070739345, -5.7060747949214584)),
    (3.112293791439015, -4.50977898199218, 0.07677926394150936, (-55.427842903154043, 261.82828066986667), (-417.83247113322339, -78.962039661962025)),
    (3.604431156848168, -3.740078835998472, 0.8372515917664746, (70.139336225286767, -36.841095999257307), (20.350306544649087, -20.638685569492077)),
    (-2.3591448759150224, -0.692505864873656, -0.27005518252196736, (17.054424716191907, -11.149898744102887), (17.515335525514763, 26.788285521560653)),
    (-2.701013847695709, -0.4526368823652138, -0.09094067374643355, (19.724802950745822, -9.4100037431185602), (14.783118648157078, 30.982731251411729)),
    (-1.277424366507225, 2.2532173669282605, -0.38463721721158506, (10.482296571406048, 0.6851668531933387), (1.2046850175122527, -14.933816069947832)),
];
