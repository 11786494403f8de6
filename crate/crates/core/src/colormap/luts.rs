// Generated 256-entry lookup tables (matplotlib reference data).

pub(crate) static VIRIDIS: [[f64; 3]; 256] = [
    [0.267004, 0.004874, 0.329415],
    [0.268510, 0.009605, 0.335427],
    [0.269944, 0.014625, 0.341379],
    [0.271305, 0.019942, 0.347269],
    [0.272594, 0.025563, 0.353093],
    [0.273809, 0.031497, 0.358853],
    [0.274952, 0.037752, 0.364543],
    [0.276022, 0.044167, 0.370164],
    [0.277018, 0.050344, 0.375715],
    [0.277941, 0.056324, 0.381191],
    [0.278791, 0.062145, 0.386592],
    [0.279566, 0.067836, 0.391917],
    [0.280267, 0.073417, 0.397163],
    [0.280894, 0.078907, 0.402329],
    [0.281446, 0.084320, 0.407414],
    [0.281924, 0.089666, 0.412415],
    [0.282327, 0.094955, 0.417331],
    [0.282656, 0.100196, 0.422160],
    [0.282910, 0.105393, 0.426902],
    [0.283091, 0.110553, 0.431554],
    [0.283197, 0.115680, 0.436115],
    [0.283229, 0.120777, 0.440584],
    [0.283187, 0.125848, 0.444960],
    [0.283072, 0.130895, 0.449241],
    [0.282884, 0.135920, 0.453427],
    [0.282623, 0.140926, 0.457517],
    [0.282290, 0.145912, 0.461510],
    [0.281887, 0.150881, 0.465405],
    [0.281412, 0.155834, 0.469201],
    [0.280868, 0.160771, 0.472899],
    [0.280255, 0.165693, 0.476498],
    [0.279574, 0.170599, 0.479997],
    [0.278826, 0.175490, 0.483397],
    [0.278012, 0.180367, 0.486697],
    [0.277134, 0.185228, 0.489898],
    [0.276194, 0.190074, 0.493001],
    [0.275191, 0.194905, 0.496005],
    [0.274128, 0.199721, 0.498911],
    [0.273006, 0.204520, 0.501721],
    [0.271828, 0.209303, 0.504434],
    [0.270595, 0.214069, 0.507052],
    [0.269308, 0.218818, 0.509577],
    [0.267968, 0.223549, 0.512008],
    [0.266580, 0.228262, 0.514349],
    [0.265145, 0.232956, 0.516599],
    [0.263663, 0.237631, 0.518762],
    [0.262138, 0.242286, 0.520837],
    [0.260571, 0.246922, 0.522828],
    [0.258965, 0.251537, 0.524736],
    [0.257322, 0.256130, 0.526563],
    [0.255645, 0.260703, 0.528312],
    [0.253935, 0.265254, 0.529983],
    [0.252194, 0.269783, 0.531579],
    [0.250425, 0.274290, 0.533103],
    [0.248629, 0.278775, 0.534556],
    [0.246811, 0.283237, 0.535941],
    [0.244972, 0.287675, 0.537260],
    [0.243113, 0.292092, 0.538516],
    [0.241237, 0.296485, 0.539709],
    [0.239346, 0.300855, 0.540844],
    [0.237441, 0.305202, 0.541921],
    [0.235526, 0.309527, 0.542944],
    [0.233603, 0.313828, 0.543914],
    [0.231674, 0.318106, 0.544834],
    [0.229739, 0.322361, 0.545706],
    [0.227802, 0.326594, 0.546532],
    [0.225863, 0.330805, 0.547314],
    [0.223925, 0.334994, 0.548053],
    [0.221989, 0.339161, 0.548752],
    [0.220057, 0.343307, 0.549413],
    [0.218130, 0.347432, 0.550038],
    [0.216210, 0.351535, 0.550627],
    [0.214298, 0.355619, 0.551184],
    [0.212395, 0.359683, 0.551710],
    [0.210503, 0.363727, 0.552206],
    [0.208623, 0.367752, 0.552675],
    [0.206756, 0.371758, 0.553117],
    [0.204903, 0.375746, 0.553533],
    [0.203063, 0.379716, 0.553925],
    [0.201239, 0.383670, 0.554294],
    [0.199430, 0.387607, 0.554642],
    [0.197636, 0.391528, 0.554969],
    [0.195860, 0.395433, 0.555276],
    [0.194100, 0.399323, 0.555565],
    [0.192357, 0.403199, 0.555836],
    [0.190631, 0.407061, 0.556089],
    [0.188923, 0.410910, 0.556326],
    [0.187231, 0.414746, 0.556547],
    [0.185556, 0.418570, 0.556753],
    [0.183898, 0.422383, 0.556944],
    [0.182256, 0.426184, 0.557120],
    [0.180629, 0.429975, 0.557282],
    [0.179019, 0.433756, 0.557430],
    [0.177423, 0.437527, 0.557565],
    [0.175841, 0.441290, 0.557685],
    [0.174274, 0.445044, 0.557792],
    [0.172719, 0.448791, 0.557885],
    [0.171176, 0.452530, 0.557965],
    [0.169646, 0.456262, 0.558030],
    [0.168126, 0.459988, 0.558082],
    [0.166617, 0.463708, 0.558119],
    [0.165117, 0.467423, 0.558141],
    [0.163625, 0.471133, 0.558148],
    [0.162142, 0.474838, 0.558140],
    [0.160665, 0.478540, 0.558115],
    [0.159194, 0.482237, 0.558073],
    [0.157729, 0.485932, 0.558013],
    [0.156270, 0.489624, 0.557936],
    [0.154815, 0.493313, 0.557840],
    [0.153364, 0.497000, 0.557724],
    [0.151918, 0.500685, 0.557587],
    [0.150476, 0.504369, 0.557430],
    [0.149039, 0.508051, 0.557250],
    [0.147607, 0.511733, 0.557049],
    [0.146180, 0.515413, 0.556823],
    [0.144759, 0.519093, 0.556572],
    [0.143343, 0.522773, 0.556295],
    [0.141935, 0.526453, 0.555991],
    [0.140536, 0.530132, 0.555659],
    [0.139147, 0.533812, 0.555298],
    [0.137770, 0.537492, 0.554906],
    [0.136408, 0.541173, 0.554483],
    [0.135066, 0.544853, 0.554029],
    [0.133743, 0.548535, 0.553541],
    [0.132444, 0.552216, 0.553018],
    [0.131172, 0.555899, 0.552459],
    [0.129933, 0.559582, 0.551864],
    [0.128729, 0.563265, 0.551229],
    [0.127568, 0.566949, 0.550556],
    [0.126453, 0.570633, 0.549841],
    [0.125394, 0.574318, 0.549086],
    [0.124395, 0.578002, 0.548287],
    [0.123463, 0.581687, 0.547445],
    [0.122606, 0.585371, 0.546557],
    [0.121831, 0.589055, 0.545623],
    [0.121148, 0.592739, 0.544641],
    [0.120565, 0.596422, 0.543611],
    [0.120092, 0.600104, 0.542530],
    [0.119738, 0.603785, 0.541400],
    [0.119512, 0.607464, 0.540218],
    [0.119423, 0.611141, 0.538982],
    [0.119483, 0.614817, 0.537692],
    [0.119699, 0.618490, 0.536347],
    [0.120081, 0.622161, 0.534946],
    [0.120638, 0.625828, 0.533488],
    [0.121380, 0.629492, 0.531973],
    [0.122312, 0.633153, 0.530398],
    [0.123444, 0.636809, 0.528763],
    [0.124780, 0.640461, 0.527068],
    [0.126326, 0.644107, 0.525311],
    [0.128087, 0.647749, 0.523491],
    [0.130067, 0.651384, 0.521608],
    [0.132268, 0.655014, 0.519661],
    [0.134692, 0.658636, 0.517649],
    [0.137339, 0.662252, 0.515571],
    [0.140210, 0.665859, 0.513427],
    [0.143303, 0.669459, 0.511215],
    [0.146616, 0.673050, 0.508936],
    [0.150148, 0.676631, 0.506589],
    [0.153894, 0.680203, 0.504172],
    [0.157851, 0.683765, 0.501686],
    [0.162016, 0.687316, 0.499129],
    [0.166383, 0.690856, 0.496502],
    [0.170948, 0.694384, 0.493803],
    [0.175707, 0.697900, 0.491033],
    [0.180653, 0.701402, 0.488189],
    [0.185783, 0.704891, 0.485273],
    [0.191090, 0.708366, 0.482284],
    [0.196571, 0.711827, 0.479221],
    [0.202219, 0.715272, 0.476084],
    [0.208030, 0.718701, 0.472873],
    [0.214000, 0.722114, 0.469588],
    [0.220124, 0.725509, 0.466226],
    [0.226397, 0.728888, 0.462789],
    [0.232815, 0.732247, 0.459277],
    [0.239374, 0.735588, 0.455688],
    [0.246070, 0.738910, 0.452024],
    [0.252899, 0.742211, 0.448284],
    [0.259857, 0.745492, 0.444467],
    [0.266941, 0.748751, 0.440573],
    [0.274149, 0.751988, 0.436601],
    [0.281477, 0.755203, 0.432552],
    [0.288921, 0.758394, 0.428426],
    [0.296479, 0.761561, 0.424223],
    [0.304148, 0.764704, 0.419943],
    [0.311925, 0.767822, 0.415586],
    [0.319809, 0.770914, 0.411152],
    [0.327796, 0.773980, 0.406640],
    [0.335885, 0.777018, 0.402049],
    [0.344074, 0.780029, 0.397381],
    [0.352360, 0.783011, 0.392636],
    [0.360741, 0.785964, 0.387814],
    [0.369214, 0.788888, 0.382914],
    [0.377779, 0.791781, 0.377939],
    [0.386433, 0.794644, 0.372886],
    [0.395174, 0.797475, 0.367757],
    [0.404001, 0.800275, 0.362552],
    [0.412913, 0.803041, 0.357269],
    [0.421908, 0.805774, 0.351910],
    [0.430983, 0.808473, 0.346476],
    [0.440137, 0.811138, 0.340967],
    [0.449368, 0.813768, 0.335384],
    [0.458674, 0.816363, 0.329727],
    [0.468053, 0.818921, 0.323998],
    [0.477504, 0.821444, 0.318195],
    [0.487026, 0.823929, 0.312321],
    [0.496615, 0.826376, 0.306377],
    [0.506271, 0.828786, 0.300362],
    [0.515992, 0.831158, 0.294279],
    [0.525776, 0.833491, 0.288127],
    [0.535621, 0.835785, 0.281908],
    [0.545524, 0.838039, 0.275626],
    [0.555484, 0.840254, 0.269281],
    [0.565498, 0.842430, 0.262877],
    [0.575563, 0.844566, 0.256415],
    [0.585678, 0.846661, 0.249897],
    [0.595839, 0.848717, 0.243329],
    [0.606045, 0.850733, 0.236712],
    [0.616293, 0.852709, 0.230052],
    [0.626579, 0.854645, 0.223353],
    [0.636902, 0.856542, 0.216620],
    [0.647257, 0.858400, 0.209861],
    [0.657642, 0.860219, 0.203082],
    [0.668054, 0.861999, 0.196293],
    [0.678489, 0.863742, 0.189503],
    [0.688944, 0.865448, 0.182725],
    [0.699415, 0.867117, 0.175971],
    [0.709898, 0.868751, 0.169257],
    [0.720391, 0.870350, 0.162603],
    [0.730889, 0.871916, 0.156029],
    [0.741388, 0.873449, 0.149561],
    [0.751884, 0.874951, 0.143228],
    [0.762373, 0.876424, 0.137064],
    [0.772852, 0.877868, 0.131109],
    [0.783315, 0.879285, 0.125405],
    [0.793760, 0.880678, 0.120005],
    [0.804182, 0.882046, 0.114965],
    [0.814576, 0.883393, 0.110347],
    [0.824940, 0.884720, 0.106217],
    [0.835270, 0.886029, 0.102646],
    [0.845561, 0.887322, 0.099702],
    [0.855810, 0.888601, 0.097452],
    [0.866013, 0.889868, 0.095953],
    [0.876168, 0.891125, 0.095250],
    [0.886271, 0.892374, 0.095374],
    [0.896320, 0.893616, 0.096335],
    [0.906311, 0.894855, 0.098125],
    [0.916242, 0.896091, 0.100717],
    [0.926106, 0.897330, 0.104071],
    [0.935904, 0.898570, 0.108131],
    [0.945636, 0.899815, 0.112838],
    [0.955300, 0.901065, 0.118128],
    [0.964894, 0.902323, 0.123941],
    [0.974417, 0.903590, 0.130215],
    [0.983868, 0.904867, 0.136897],
    [0.993248, 0.906157, 0.143936],
];

pub(crate) static PLASMA: [[f64; 3]; 256] = [
    [0.050383, 0.029803, 0.527975],
    [0.063536, 0.028426, 0.533124],
    [0.075353, 0.027206, 0.538007],
    [0.086222, 0.026125, 0.542658],
    [0.096379, 0.025165, 0.547103],
    [0.105980, 0.024309, 0.551368],
    [0.115124, 0.023556, 0.555468],
    [0.123903, 0.022878, 0.559423],
    [0.132381, 0.022258, 0.563250],
    [0.140603, 0.021687, 0.566959],
    [0.148607, 0.021154, 0.570562],
    [0.156421, 0.020651, 0.574065],
    [0.164070, 0.020171, 0.577478],
    [0.171574, 0.019706, 0.580806],
    [0.178950, 0.019252, 0.584054],
    [0.186213, 0.018803, 0.587228],
    [0.193374, 0.018354, 0.590330],
    [0.200445, 0.017902, 0.593364],
    [0.207435, 0.017442, 0.596333],
    [0.214350, 0.016973, 0.599239],
    [0.221197, 0.016497, 0.602083],
    [0.227983, 0.016007, 0.604867],
    [0.234715, 0.015502, 0.607592],
    [0.241396, 0.014979, 0.610259],
    [0.248032, 0.014439, 0.612868],
    [0.254627, 0.013882, 0.615419],
    [0.261183, 0.013308, 0.617911],
    [0.267703, 0.012716, 0.620346],
    [0.274191, 0.012109, 0.622722],
    [0.280648, 0.011488, 0.625038],
    [0.287076, 0.010855, 0.627295],
    [0.293478, 0.010213, 0.629490],
    [0.299855, 0.009561, 0.631624],
    [0.306210, 0.008902, 0.633694],
    [0.312543, 0.008239, 0.635700],
    [0.318856, 0.007576, 0.637640],
    [0.325150, 0.006915, 0.639512],
    [0.331426, 0.006261, 0.641316],
    [0.337683, 0.005618, 0.643049],
    [0.343925, 0.004991, 0.644710],
    [0.350150, 0.004382, 0.646298],
    [0.356359, 0.003798, 0.647810],
    [0.362553, 0.003243, 0.649245],
    [0.368733, 0.002724, 0.650601],
    [0.374897, 0.002245, 0.651876],
    [0.381047, 0.001814, 0.653068],
    [0.387183, 0.001434, 0.654177],
    [0.393304, 0.001114, 0.655199],
    [0.399411, 0.000859, 0.656133],
    [0.405503, 0.000678, 0.656977],
    [0.411580, 0.000577, 0.657730],
    [0.417642, 0.000564, 0.658390],
    [0.423689, 0.000646, 0.658956],
    [0.429719, 0.000831, 0.659425],
    [0.435734, 0.001127, 0.659797],
    [0.441732, 0.001540, 0.660069],
    [0.447714, 0.002080, 0.660240],
    [0.453677, 0.002755, 0.660310],
    [0.459623, 0.003574, 0.660277],
    [0.465550, 0.004545, 0.660139],
    [0.471457, 0.005678, 0.659897],
    [0.477344, 0.006980, 0.659549],
    [0.483210, 0.008460, 0.659095],
    [0.489055, 0.010127, 0.658534],
    [0.494877, 0.011990, 0.657865],
    [0.500678, 0.014055, 0.657088],
    [0.506454, 0.016333, 0.656202],
    [0.512206, 0.018833, 0.655209],
    [0.517933, 0.021563, 0.654109],
    [0.523633, 0.024532, 0.652901],
    [0.529306, 0.027747, 0.651586],
    [0.534952, 0.031217, 0.650165],
    [0.540570, 0.034950, 0.648640],
    [0.546157, 0.038954, 0.647010],
    [0.551715, 0.043136, 0.645277],
    [0.557243, 0.047331, 0.643443],
    [0.562738, 0.051545, 0.641509],
    [0.568201, 0.055778, 0.639477],
    [0.573632, 0.060028, 0.637349],
    [0.579029, 0.064296, 0.635126],
    [0.584391, 0.068579, 0.632812],
    [0.589719, 0.072878, 0.630408],
    [0.595011, 0.077190, 0.627917],
    [0.600266, 0.081516, 0.625342],
    [0.605485, 0.085854, 0.622686],
    [0.610667, 0.090204, 0.619951],
    [0.615812, 0.094564, 0.617140],
    [0.620919, 0.098934, 0.614257],
    [0.625987, 0.103312, 0.611305],
    [0.631017, 0.107699, 0.608287],
    [0.636008, 0.112092, 0.605205],
    [0.640959, 0.116492, 0.602065],
    [0.645872, 0.120898, 0.598867],
    [0.650746, 0.125309, 0.595617],
    [0.655580, 0.129725, 0.592317],
    [0.660374, 0.134144, 0.588971],
    [0.665129, 0.138566, 0.585582],
    [0.669845, 0.142992, 0.582154],
    [0.674522, 0.147419, 0.578688],
    [0.679160, 0.151848, 0.575189],
    [0.683758, 0.156278, 0.571660],
    [0.688318, 0.160709, 0.568103],
    [0.692840, 0.165141, 0.564522],
    [0.697324, 0.169573, 0.560919],
    [0.701769, 0.174005, 0.557296],
    [0.706178, 0.178437, 0.553657],
    [0.710549, 0.182868, 0.550004],
    [0.714883, 0.187299, 0.546338],
    [0.719181, 0.191729, 0.542663],
    [0.723444, 0.196158, 0.538981],
    [0.727670, 0.200586, 0.535293],
    [0.731862, 0.205013, 0.531601],
    [0.736019, 0.209439, 0.527908],
    [0.740143, 0.213864, 0.524216],
    [0.744232, 0.218288, 0.520524],
    [0.748289, 0.222711, 0.516834],
    [0.752312, 0.227133, 0.513149],
    [0.756304, 0.231555, 0.509468],
    [0.760264, 0.235976, 0.505794],
    [0.764193, 0.240396, 0.502126],
    [0.768090, 0.244817, 0.498465],
    [0.771958, 0.249237, 0.494813],
    [0.775796, 0.253658, 0.491171],
    [0.779604, 0.258078, 0.487539],
    [0.783383, 0.262500, 0.483918],
    [0.787133, 0.266922, 0.480307],
    [0.790855, 0.271345, 0.476706],
    [0.794549, 0.275770, 0.473117],
    [0.798216, 0.280197, 0.469538],
    [0.801855, 0.284626, 0.465971],
    [0.805467, 0.289057, 0.462415],
    [0.809052, 0.293491, 0.458870],
    [0.812612, 0.297928, 0.455338],
    [0.816144, 0.302368, 0.451816],
    [0.819651, 0.306812, 0.448306],
    [0.823132, 0.311261, 0.444806],
    [0.826588, 0.315714, 0.441316],
    [0.830018, 0.320172, 0.437836],
    [0.833422, 0.324635, 0.434366],
    [0.836801, 0.329105, 0.430905],
    [0.840155, 0.333580, 0.427455],
    [0.843484, 0.338062, 0.424013],
    [0.846788, 0.342551, 0.420579],
    [0.850066, 0.347048, 0.417153],
    [0.853319, 0.351553, 0.413734],
    [0.856547, 0.356066, 0.410322],
    [0.859750, 0.360588, 0.406917],
    [0.862927, 0.365119, 0.403519],
    [0.866078, 0.369660, 0.400126],
    [0.869203, 0.374212, 0.396738],
    [0.872303, 0.378774, 0.393355],
    [0.875376, 0.383347, 0.389976],
    [0.878423, 0.387932, 0.386600],
    [0.881443, 0.392529, 0.383229],
    [0.884436, 0.397139, 0.379860],
    [0.887402, 0.401762, 0.376494],
    [0.890340, 0.406398, 0.373130],
    [0.893250, 0.411048, 0.369768],
    [0.896131, 0.415712, 0.366407],
    [0.898984, 0.420392, 0.363047],
    [0.901807, 0.425087, 0.359688],
    [0.904601, 0.429797, 0.356329],
    [0.907365, 0.434524, 0.352970],
    [0.910098, 0.439268, 0.349610],
    [0.912800, 0.444029, 0.346251],
    [0.915471, 0.448807, 0.342890],
    [0.918109, 0.453603, 0.339529],
    [0.920714, 0.458417, 0.336166],
    [0.923287, 0.463251, 0.332801],
    [0.925825, 0.468103, 0.329435],
    [0.928329, 0.472975, 0.326067],
    [0.930798, 0.477867, 0.322697],
    [0.933232, 0.482780, 0.319325],
    [0.935630, 0.487712, 0.315952],
    [0.937990, 0.492667, 0.312575],
    [0.940313, 0.497642, 0.309197],
    [0.942598, 0.502639, 0.305816],
    [0.944844, 0.507658, 0.302433],
    [0.947051, 0.512699, 0.299049],
    [0.949217, 0.517763, 0.295662],
    [0.951344, 0.522850, 0.292275],
    [0.953428, 0.527960, 0.288883],
    [0.955470, 0.533093, 0.285490],
    [0.957469, 0.538250, 0.282096],
    [0.959424, 0.543431, 0.278701],
    [0.961336, 0.548636, 0.275305],
    [0.963203, 0.553865, 0.271909],
    [0.965024, 0.559118, 0.268513],
    [0.966798, 0.564396, 0.265118],
    [0.968526, 0.569700, 0.261721],
    [0.970205, 0.575028, 0.258325],
    [0.971835, 0.580382, 0.254931],
    [0.973416, 0.585761, 0.251540],
    [0.974947, 0.591165, 0.248151],
    [0.976428, 0.596595, 0.244767],
    [0.977856, 0.602051, 0.241387],
    [0.979233, 0.607532, 0.238013],
    [0.980556, 0.613039, 0.234646],
    [0.981826, 0.618572, 0.231287],
    [0.983041, 0.624131, 0.227937],
    [0.984199, 0.629718, 0.224595],
    [0.985301, 0.635330, 0.221265],
    [0.986345, 0.640969, 0.217948],
    [0.987332, 0.646633, 0.214648],
    [0.988260, 0.652325, 0.211364],
    [0.989128, 0.658043, 0.208100],
    [0.989935, 0.663787, 0.204859],
    [0.990681, 0.669558, 0.201642],
    [0.991365, 0.675355, 0.198453],
    [0.991985, 0.681179, 0.195295],
    [0.992541, 0.687030, 0.192170],
    [0.993032, 0.692907, 0.189084],
    [0.993456, 0.698810, 0.186041],
    [0.993814, 0.704741, 0.183043],
    [0.994103, 0.710698, 0.180097],
    [0.994324, 0.716681, 0.177208],
    [0.994474, 0.722691, 0.174381],
    [0.994553, 0.728728, 0.171622],
    [0.994561, 0.734791, 0.168938],
    [0.994495, 0.740880, 0.166335],
    [0.994355, 0.746995, 0.163821],
    [0.994141, 0.753137, 0.161404],
    [0.993851, 0.759304, 0.159092],
    [0.993482, 0.765499, 0.156891],
    [0.993033, 0.771720, 0.154808],
    [0.992505, 0.777967, 0.152855],
    [0.991897, 0.784239, 0.151042],
    [0.991209, 0.790537, 0.149377],
    [0.990439, 0.796859, 0.147870],
    [0.989587, 0.803205, 0.146529],
    [0.988648, 0.809579, 0.145357],
    [0.987621, 0.815978, 0.144363],
    [0.986509, 0.822401, 0.143557],
    [0.985314, 0.828846, 0.142945],
    [0.984031, 0.835315, 0.142528],
    [0.982653, 0.841812, 0.142303],
    [0.981190, 0.848329, 0.142279],
    [0.979644, 0.854866, 0.142453],
    [0.977995, 0.861432, 0.142808],
    [0.976265, 0.868016, 0.143351],
    [0.974443, 0.874622, 0.144061],
    [0.972530, 0.881250, 0.144923],
    [0.970533, 0.887896, 0.145919],
    [0.968443, 0.894564, 0.147014],
    [0.966271, 0.901249, 0.148180],
    [0.964021, 0.907950, 0.149370],
    [0.961681, 0.914672, 0.150520],
    [0.959276, 0.921407, 0.151566],
    [0.956808, 0.928152, 0.152409],
    [0.954287, 0.934908, 0.152921],
    [0.951726, 0.941671, 0.152925],
    [0.949151, 0.948435, 0.152178],
    [0.946602, 0.955190, 0.150328],
    [0.944152, 0.961916, 0.146861],
    [0.941896, 0.968590, 0.140956],
    [0.940015, 0.975158, 0.131326],
];

pub(crate) static INFERNO: [[f64; 3]; 256] = [
    [0.001462, 0.000466, 0.013866],
    [0.002267, 0.001270, 0.018570],
    [0.003299, 0.002249, 0.024239],
    [0.004547, 0.003392, 0.030909],
    [0.006006, 0.004692, 0.038558],
    [0.007676, 0.006136, 0.046836],
    [0.009561, 0.007713, 0.055143],
    [0.011663, 0.009417, 0.063460],
    [0.013995, 0.011225, 0.071862],
    [0.016561, 0.013136, 0.080282],
    [0.019373, 0.015133, 0.088767],
    [0.022447, 0.017199, 0.097327],
    [0.025793, 0.019331, 0.105930],
    [0.029432, 0.021503, 0.114621],
    [0.033385, 0.023702, 0.123397],
    [0.037668, 0.025921, 0.132232],
    [0.042253, 0.028139, 0.141141],
    [0.046915, 0.030324, 0.150164],
    [0.051644, 0.032474, 0.159254],
    [0.056449, 0.034569, 0.168414],
    [0.061340, 0.036590, 0.177642],
    [0.066331, 0.038504, 0.186962],
    [0.071429, 0.040294, 0.196354],
    [0.076637, 0.041905, 0.205799],
    [0.081962, 0.043328, 0.215289],
    [0.087411, 0.044556, 0.224813],
    [0.092990, 0.045583, 0.234358],
    [0.098702, 0.046402, 0.243904],
    [0.104551, 0.047008, 0.253430],
    [0.110536, 0.047399, 0.262912],
    [0.116656, 0.047574, 0.272321],
    [0.122908, 0.047536, 0.281624],
    [0.129285, 0.047293, 0.290788],
    [0.135778, 0.046856, 0.299776],
    [0.142378, 0.046242, 0.308553],
    [0.149073, 0.045468, 0.317085],
    [0.155850, 0.044559, 0.325338],
    [0.162689, 0.043554, 0.333277],
    [0.169575, 0.042489, 0.340874],
    [0.176493, 0.041402, 0.348111],
    [0.183429, 0.040329, 0.354971],
    [0.190367, 0.039309, 0.361447],
    [0.197297, 0.038400, 0.367535],
    [0.204209, 0.037632, 0.373238],
    [0.211095, 0.037030, 0.378563],
    [0.217949, 0.036615, 0.383522],
    [0.224763, 0.036405, 0.388129],
    [0.231538, 0.036405, 0.392400],
    [0.238273, 0.036621, 0.396353],
    [0.244967, 0.037055, 0.400007],
    [0.251620, 0.037705, 0.403378],
    [0.258234, 0.038571, 0.406485],
    [0.264810, 0.039647, 0.409345],
    [0.271347, 0.040922, 0.411976],
    [0.277850, 0.042353, 0.414392],
    [0.284321, 0.043933, 0.416608],
    [0.290763, 0.045644, 0.418637],
    [0.297178, 0.047470, 0.420491],
    [0.303568, 0.049396, 0.422182],
    [0.309935, 0.051407, 0.423721],
    [0.316282, 0.053490, 0.425116],
    [0.322610, 0.055634, 0.426377],
    [0.328921, 0.057827, 0.427511],
    [0.335217, 0.060060, 0.428524],
    [0.341500, 0.062325, 0.429425],
    [0.347771, 0.064616, 0.430217],
    [0.354032, 0.066925, 0.430906],
    [0.360284, 0.069247, 0.431497],
    [0.366529, 0.071579, 0.431994],
    [0.372768, 0.073915, 0.432400],
    [0.379001, 0.076253, 0.432719],
    [0.385228, 0.078591, 0.432955],
    [0.391453, 0.080927, 0.433109],
    [0.397674, 0.083257, 0.433183],
    [0.403894, 0.085580, 0.433179],
    [0.410113, 0.087896, 0.433098],
    [0.416331, 0.090203, 0.432943],
    [0.422549, 0.092501, 0.432714],
    [0.428768, 0.094790, 0.432412],
    [0.434987, 0.097069, 0.432039],
    [0.441207, 0.099338, 0.431594],
    [0.447428, 0.101597, 0.431080],
    [0.453651, 0.103848, 0.430498],
    [0.459875, 0.106089, 0.429846],
    [0.466100, 0.108322, 0.429125],
    [0.472328, 0.110547, 0.428334],
    [0.478558, 0.112764, 0.427475],
    [0.484789, 0.114974, 0.426548],
    [0.491022, 0.117179, 0.425552],
    [0.497257, 0.119379, 0.424488],
    [0.503493, 0.121575, 0.423356],
    [0.509730, 0.123769, 0.422156],
    [0.515967, 0.125960, 0.420887],
    [0.522206, 0.128150, 0.419549],
    [0.528444, 0.130341, 0.418142],
    [0.534683, 0.132534, 0.416667],
    [0.540920, 0.134729, 0.415123],
    [0.547157, 0.136929, 0.413511],
    [0.553392, 0.139134, 0.411829],
    [0.559624, 0.141346, 0.410078],
    [0.565854, 0.143567, 0.408258],
    [0.572081, 0.145797, 0.406369],
    [0.578304, 0.148039, 0.404411],
    [0.584521, 0.150294, 0.402385],
    [0.590734, 0.152563, 0.400290],
    [0.596940, 0.154848, 0.398125],
    [0.603139, 0.157151, 0.395891],
    [0.609330, 0.159474, 0.393589],
    [0.615513, 0.161817, 0.391219],
    [0.621685, 0.164184, 0.388781],
    [0.627847, 0.166575, 0.386276],
    [0.633998, 0.168992, 0.383704],
    [0.640135, 0.171438, 0.381065],
    [0.646260, 0.173914, 0.378359],
    [0.652369, 0.176421, 0.375586],
    [0.658463, 0.178962, 0.372748],
    [0.664540, 0.181539, 0.369846],
    [0.670599, 0.184153, 0.366879],
    [0.676638, 0.186807, 0.363849],
    [0.682656, 0.189501, 0.360757],
    [0.688653, 0.192239, 0.357603],
    [0.694627, 0.195021, 0.354388],
    [0.700576, 0.197851, 0.351113],
    [0.706500, 0.200728, 0.347777],
    [0.712396, 0.203656, 0.344383],
    [0.718264, 0.206636, 0.340931],
    [0.724103, 0.209670, 0.337424],
    [0.729909, 0.212759, 0.333861],
    [0.735683, 0.215906, 0.330245],
    [0.741423, 0.219112, 0.326576],
    [0.747127, 0.222378, 0.322856],
    [0.752794, 0.225706, 0.319085],
    [0.758422, 0.229097, 0.315266],
    [0.764010, 0.232554, 0.311399],
    [0.769556, 0.236077, 0.307485],
    [0.775059, 0.239667, 0.303526],
    [0.780517, 0.243327, 0.299523],
    [0.785929, 0.247056, 0.295477],
    [0.791293, 0.250856, 0.291390],
    [0.796607, 0.254728, 0.287264],
    [0.801871, 0.258674, 0.283099],
    [0.807082, 0.262692, 0.278898],
    [0.812239, 0.266786, 0.274661],
    [0.817341, 0.270954, 0.270390],
    [0.822386, 0.275197, 0.266085],
    [0.827372, 0.279517, 0.261750],
    [0.832299, 0.283913, 0.257383],
    [0.837165, 0.288385, 0.252988],
    [0.841969, 0.292933, 0.248564],
    [0.846709, 0.297559, 0.244113],
    [0.851384, 0.302260, 0.239636],
    [0.855992, 0.307038, 0.235133],
    [0.860533, 0.311892, 0.230606],
    [0.865006, 0.316822, 0.226055],
    [0.869409, 0.321827, 0.221482],
    [0.873741, 0.326906, 0.216886],
    [0.878001, 0.332060, 0.212268],
    [0.882188, 0.337287, 0.207628],
    [0.886302, 0.342586, 0.202968],
    [0.890341, 0.347957, 0.198286],
    [0.894305, 0.353399, 0.193584],
    [0.898192, 0.358911, 0.188860],
    [0.902003, 0.364492, 0.184116],
    [0.905735, 0.370140, 0.179350],
    [0.909390, 0.375856, 0.174563],
    [0.912966, 0.381636, 0.169755],
    [0.916462, 0.387481, 0.164924],
    [0.919879, 0.393389, 0.160070],
    [0.923215, 0.399359, 0.155193],
    [0.926470, 0.405389, 0.150292],
    [0.929644, 0.411479, 0.145367],
    [0.932737, 0.417627, 0.140417],
    [0.935747, 0.423831, 0.135440],
    [0.938675, 0.430091, 0.130438],
    [0.941521, 0.436405, 0.125409],
    [0.944285, 0.442772, 0.120354],
    [0.946965, 0.449191, 0.115272],
    [0.949562, 0.455660, 0.110164],
    [0.952075, 0.462178, 0.105031],
    [0.954506, 0.468744, 0.099874],
    [0.956852, 0.475356, 0.094695],
    [0.959114, 0.482014, 0.089499],
    [0.961293, 0.488716, 0.084289],
    [0.963387, 0.495462, 0.079073],
    [0.965397, 0.502249, 0.073859],
    [0.967322, 0.509078, 0.068659],
    [0.969163, 0.515946, 0.063488],
    [0.970919, 0.522853, 0.058367],
    [0.972590, 0.529798, 0.053324],
    [0.974176, 0.536780, 0.048392],
    [0.975677, 0.543798, 0.043618],
    [0.977092, 0.550850, 0.039050],
    [0.978422, 0.557937, 0.034931],
    [0.979666, 0.565057, 0.031409],
    [0.980824, 0.572209, 0.028508],
    [0.981895, 0.579392, 0.026250],
    [0.982881, 0.586606, 0.024661],
    [0.983779, 0.593849, 0.023770],
    [0.984591, 0.601122, 0.023606],
    [0.985315, 0.608422, 0.024202],
    [0.985952, 0.615750, 0.025592],
    [0.986502, 0.623105, 0.027814],
    [0.986964, 0.630485, 0.030908],
    [0.987337, 0.637890, 0.034916],
    [0.987622, 0.645320, 0.039886],
    [0.987819, 0.652773, 0.045581],
    [0.987926, 0.660250, 0.051750],
    [0.987945, 0.667748, 0.058329],
    [0.987874, 0.675267, 0.065257],
    [0.987714, 0.682807, 0.072489],
    [0.987464, 0.690366, 0.079990],
    [0.987124, 0.697944, 0.087731],
    [0.986694, 0.705540, 0.095694],
    [0.986175, 0.713153, 0.103863],
    [0.985566, 0.720782, 0.112229],
    [0.984865, 0.728427, 0.120785],
    [0.984075, 0.736087, 0.129527],
    [0.983196, 0.743758, 0.138453],
    [0.982228, 0.751442, 0.147565],
    [0.981173, 0.759135, 0.156863],
    [0.980032, 0.766837, 0.166353],
    [0.978806, 0.774545, 0.176037],
    [0.977497, 0.782258, 0.185923],
    [0.976108, 0.789974, 0.196018],
    [0.974638, 0.797692, 0.206332],
    [0.973088, 0.805409, 0.216877],
    [0.971468, 0.813122, 0.227658],
    [0.969783, 0.820825, 0.238686],
    [0.968041, 0.828515, 0.249972],
    [0.966243, 0.836191, 0.261534],
    [0.964394, 0.843848, 0.273391],
    [0.962517, 0.851476, 0.285546],
    [0.960626, 0.859069, 0.298010],
    [0.958720, 0.866624, 0.310820],
    [0.956834, 0.874129, 0.323974],
    [0.954997, 0.881569, 0.337475],
    [0.953215, 0.888942, 0.351369],
    [0.951546, 0.896226, 0.365627],
    [0.950018, 0.903409, 0.380271],
    [0.948683, 0.910473, 0.395289],
    [0.947594, 0.917399, 0.410665],
    [0.946809, 0.924168, 0.426373],
    [0.946392, 0.930761, 0.442367],
    [0.946403, 0.937159, 0.458592],
    [0.946903, 0.943348, 0.474970],
    [0.947937, 0.949318, 0.491426],
    [0.949545, 0.955063, 0.507860],
    [0.951740, 0.960587, 0.524203],
    [0.954529, 0.965896, 0.540361],
    [0.957896, 0.971003, 0.556275],
    [0.961812, 0.975924, 0.571925],
    [0.966249, 0.980678, 0.587206],
    [0.971162, 0.985282, 0.602154],
    [0.976511, 0.989753, 0.616760],
    [0.982257, 0.994109, 0.631017],
    [0.988362, 0.998364, 0.644924],
];

pub(crate) static MAGMA: [[f64; 3]; 256] = [
    [0.001462, 0.000466, 0.013866],
    [0.002258, 0.001295, 0.018331],
    [0.003279, 0.002305, 0.023708],
    [0.004512, 0.003490, 0.029965],
    [0.005950, 0.004843, 0.037130],
    [0.007588, 0.006356, 0.044973],
    [0.009426, 0.008022, 0.052844],
    [0.011465, 0.009828, 0.060750],
    [0.013708, 0.011771, 0.068667],
    [0.016156, 0.013840, 0.076603],
    [0.018815, 0.016026, 0.084584],
    [0.021692, 0.018320, 0.092610],
    [0.024792, 0.020715, 0.100676],
    [0.028123, 0.023201, 0.108787],
    [0.031696, 0.025765, 0.116965],
    [0.035520, 0.028397, 0.125209],
    [0.039608, 0.031090, 0.133515],
    [0.043830, 0.033830, 0.141886],
    [0.048062, 0.036607, 0.150327],
    [0.052320, 0.039407, 0.158841],
    [0.056615, 0.042160, 0.167446],
    [0.060949, 0.044794, 0.176129],
    [0.065330, 0.047318, 0.184892],
    [0.069764, 0.049726, 0.193735],
    [0.074257, 0.052017, 0.202660],
    [0.078815, 0.054184, 0.211667],
    [0.083446, 0.056225, 0.220755],
    [0.088155, 0.058133, 0.229922],
    [0.092949, 0.059904, 0.239164],
    [0.097833, 0.061531, 0.248477],
    [0.102815, 0.063010, 0.257854],
    [0.107899, 0.064335, 0.267289],
    [0.113094, 0.065492, 0.276784],
    [0.118405, 0.066479, 0.286321],
    [0.123833, 0.067295, 0.295879],
    [0.129380, 0.067935, 0.305443],
    [0.135053, 0.068391, 0.315000],
    [0.140858, 0.068654, 0.324538],
    [0.146785, 0.068738, 0.334011],
    [0.152839, 0.068637, 0.343404],
    [0.159018, 0.068354, 0.352688],
    [0.165308, 0.067911, 0.361816],
    [0.171713, 0.067305, 0.370771],
    [0.178212, 0.066576, 0.379497],
    [0.184801, 0.065732, 0.387973],
    [0.191460, 0.064818, 0.396152],
    [0.198177, 0.063862, 0.404009],
    [0.204935, 0.062907, 0.411514],
    [0.211718, 0.061992, 0.418647],
    [0.218512, 0.061158, 0.425392],
    [0.225302, 0.060445, 0.431742],
    [0.232077, 0.059889, 0.437695],
    [0.238826, 0.059517, 0.443256],
    [0.245543, 0.059352, 0.448436],
    [0.252220, 0.059415, 0.453248],
    [0.258857, 0.059706, 0.457710],
    [0.265447, 0.060237, 0.461840],
    [0.271994, 0.060994, 0.465660],
    [0.278493, 0.061978, 0.469190],
    [0.284951, 0.063168, 0.472451],
    [0.291366, 0.064553, 0.475462],
    [0.297740, 0.066117, 0.478243],
    [0.304081, 0.067835, 0.480812],
    [0.310382, 0.069702, 0.483186],
    [0.316654, 0.071690, 0.485380],
    [0.322899, 0.073782, 0.487408],
    [0.329114, 0.075972, 0.489287],
    [0.335308, 0.078236, 0.491024],
    [0.341482, 0.080564, 0.492631],
    [0.347636, 0.082946, 0.494121],
    [0.353773, 0.085373, 0.495501],
    [0.359898, 0.087831, 0.496778],
    [0.366012, 0.090314, 0.497960],
    [0.372116, 0.092816, 0.499053],
    [0.378211, 0.095332, 0.500067],
    [0.384299, 0.097855, 0.501002],
    [0.390384, 0.100379, 0.501864],
    [0.396467, 0.102902, 0.502658],
    [0.402548, 0.105420, 0.503386],
    [0.408629, 0.107930, 0.504052],
    [0.414709, 0.110431, 0.504662],
    [0.420791, 0.112920, 0.505215],
    [0.426877, 0.115395, 0.505714],
    [0.432967, 0.117855, 0.506160],
    [0.439062, 0.120298, 0.506555],
    [0.445163, 0.122724, 0.506901],
    [0.451271, 0.125132, 0.507198],
    [0.457386, 0.127522, 0.507448],
    [0.463508, 0.129893, 0.507652],
    [0.469640, 0.132245, 0.507809],
    [0.475780, 0.134577, 0.507921],
    [0.481929, 0.136891, 0.507989],
    [0.488088, 0.139186, 0.508011],
    [0.494258, 0.141462, 0.507988],
    [0.500438, 0.143719, 0.507920],
    [0.506629, 0.145958, 0.507806],
    [0.512831, 0.148179, 0.507648],
    [0.519045, 0.150383, 0.507443],
    [0.525270, 0.152569, 0.507192],
    [0.531507, 0.154739, 0.506895],
    [0.537755, 0.156894, 0.506551],
    [0.544015, 0.159033, 0.506159],
    [0.550287, 0.161158, 0.505719],
    [0.556571, 0.163269, 0.505230],
    [0.562866, 0.165368, 0.504692],
    [0.569172, 0.167454, 0.504105],
    [0.575490, 0.169530, 0.503466],
    [0.581819, 0.171596, 0.502777],
    [0.588158, 0.173652, 0.502035],
    [0.594508, 0.175701, 0.501241],
    [0.600868, 0.177743, 0.500394],
    [0.607238, 0.179779, 0.499492],
    [0.613617, 0.181811, 0.498536],
    [0.620005, 0.183840, 0.497524],
    [0.626401, 0.185867, 0.496456],
    [0.632805, 0.187893, 0.495332],
    [0.639216, 0.189921, 0.494150],
    [0.645633, 0.191952, 0.492910],
    [0.652056, 0.193986, 0.491611],
    [0.658483, 0.196027, 0.490253],
    [0.664915, 0.198075, 0.488836],
    [0.671349, 0.200133, 0.487358],
    [0.677786, 0.202203, 0.485819],
    [0.684224, 0.204286, 0.484219],
    [0.690661, 0.206384, 0.482558],
    [0.697098, 0.208501, 0.480835],
    [0.703532, 0.210638, 0.479049],
    [0.709962, 0.212797, 0.477201],
    [0.716387, 0.214982, 0.475290],
    [0.722805, 0.217194, 0.473316],
    [0.729216, 0.219437, 0.471279],
    [0.735616, 0.221713, 0.469180],
    [0.742004, 0.224025, 0.467018],
    [0.748378, 0.226377, 0.464794],
    [0.754737, 0.228772, 0.462509],
    [0.761077, 0.231214, 0.460162],
    [0.767398, 0.233705, 0.457755],
    [0.773695, 0.236249, 0.455289],
    [0.779968, 0.238851, 0.452765],
    [0.786212, 0.241514, 0.450184],
    [0.792427, 0.244242, 0.447543],
    [0.798608, 0.247040, 0.444848],
    [0.804752, 0.249911, 0.442102],
    [0.810855, 0.252861, 0.439305],
    [0.816914, 0.255895, 0.436461],
    [0.822926, 0.259016, 0.433573],
    [0.828886, 0.262229, 0.430644],
    [0.834791, 0.265540, 0.427671],
    [0.840636, 0.268953, 0.424666],
    [0.846416, 0.272473, 0.421631],
    [0.852126, 0.276106, 0.418573],
    [0.857763, 0.279857, 0.415496],
    [0.863320, 0.283729, 0.412403],
    [0.868793, 0.287728, 0.409303],
    [0.874176, 0.291859, 0.406205],
    [0.879464, 0.296125, 0.403118],
    [0.884651, 0.300530, 0.400047],
    [0.889731, 0.305079, 0.397002],
    [0.894700, 0.309773, 0.393995],
    [0.899552, 0.314616, 0.391037],
    [0.904281, 0.319610, 0.388137],
    [0.908884, 0.324755, 0.385308],
    [0.913354, 0.330052, 0.382563],
    [0.917689, 0.335500, 0.379915],
    [0.921884, 0.341098, 0.377376],
    [0.925937, 0.346844, 0.374959],
    [0.929845, 0.352734, 0.372677],
    [0.933606, 0.358764, 0.370541],
    [0.937221, 0.364929, 0.368567],
    [0.940687, 0.371224, 0.366762],
    [0.944006, 0.377643, 0.365136],
    [0.947180, 0.384178, 0.363701],
    [0.950210, 0.390820, 0.362468],
    [0.953099, 0.397563, 0.361438],
    [0.955849, 0.404400, 0.360619],
    [0.958464, 0.411324, 0.360014],
    [0.960949, 0.418323, 0.359630],
    [0.963310, 0.425390, 0.359469],
    [0.965549, 0.432519, 0.359529],
    [0.967671, 0.439703, 0.359810],
    [0.969680, 0.446936, 0.360311],
    [0.971582, 0.454210, 0.361030],
    [0.973381, 0.461520, 0.361965],
    [0.975082, 0.468861, 0.363111],
    [0.976690, 0.476226, 0.364466],
    [0.978210, 0.483612, 0.366025],
    [0.979645, 0.491014, 0.367783],
    [0.981000, 0.498428, 0.369734],
    [0.982279, 0.505851, 0.371874],
    [0.983485, 0.513280, 0.374198],
    [0.984622, 0.520713, 0.376698],
    [0.985693, 0.528148, 0.379371],
    [0.986700, 0.535582, 0.382210],
    [0.987646, 0.543015, 0.385210],
    [0.988533, 0.550446, 0.388365],
    [0.989363, 0.557873, 0.391671],
    [0.990138, 0.565296, 0.395122],
    [0.990871, 0.572706, 0.398714],
    [0.991558, 0.580107, 0.402441],
    [0.992196, 0.587502, 0.406299],
    [0.992785, 0.594891, 0.410283],
    [0.993326, 0.602275, 0.414390],
    [0.993834, 0.609644, 0.418613],
    [0.994309, 0.616999, 0.422950],
    [0.994738, 0.624350, 0.427397],
    [0.995122, 0.631696, 0.431951],
    [0.995480, 0.639027, 0.436607],
    [0.995810, 0.646344, 0.441361],
    [0.996096, 0.653659, 0.446213],
    [0.996341, 0.660969, 0.451160],
    [0.996580, 0.668256, 0.456192],
    [0.996775, 0.675541, 0.461314],
    [0.996925, 0.682828, 0.466526],
    [0.997077, 0.690088, 0.471811],
    [0.997186, 0.697349, 0.477182],
    [0.997254, 0.704611, 0.482635],
    [0.997325, 0.711848, 0.488154],
    [0.997351, 0.719089, 0.493755],
    [0.997351, 0.726324, 0.499428],
    [0.997341, 0.733545, 0.505167],
    [0.997285, 0.740772, 0.510983],
    [0.997228, 0.747981, 0.516859],
    [0.997138, 0.755190, 0.522806],
    [0.997019, 0.762398, 0.528821],
    [0.996898, 0.769591, 0.534892],
    [0.996727, 0.776795, 0.541039],
    [0.996571, 0.783977, 0.547233],
    [0.996369, 0.791167, 0.553499],
    [0.996162, 0.798348, 0.559820],
    [0.995932, 0.805527, 0.566202],
    [0.995680, 0.812706, 0.572645],
    [0.995424, 0.819875, 0.579140],
    [0.995131, 0.827052, 0.585701],
    [0.994851, 0.834213, 0.592307],
    [0.994524, 0.841387, 0.598983],
    [0.994222, 0.848540, 0.605696],
    [0.993866, 0.855711, 0.612482],
    [0.993545, 0.862859, 0.619299],
    [0.993170, 0.870024, 0.626189],
    [0.992831, 0.877168, 0.633109],
    [0.992440, 0.884330, 0.640099],
    [0.992089, 0.891470, 0.647116],
    [0.991688, 0.898627, 0.654202],
    [0.991332, 0.905763, 0.661309],
    [0.990930, 0.912915, 0.668481],
    [0.990570, 0.920049, 0.675675],
    [0.990175, 0.927196, 0.682926],
    [0.989815, 0.934329, 0.690198],
    [0.989434, 0.941470, 0.697519],
    [0.989077, 0.948604, 0.704863],
    [0.988717, 0.955742, 0.712242],
    [0.988367, 0.962878, 0.719649],
    [0.988033, 0.970012, 0.727077],
    [0.987691, 0.977154, 0.734536],
    [0.987387, 0.984288, 0.742002],
    [0.987053, 0.991438, 0.749504],
];

pub(crate) static CIVIDIS: [[f64; 3]; 256] = [
    [0.000000, 0.135112, 0.304751],
    [0.000000, 0.138068, 0.311105],
    [0.000000, 0.141013, 0.317579],
    [0.000000, 0.143951, 0.323982],
    [0.000000, 0.146877, 0.330479],
    [0.000000, 0.149791, 0.337065],
    [0.000000, 0.152673, 0.343704],
    [0.000000, 0.155377, 0.350500],
    [0.000000, 0.157932, 0.357521],
    [0.000000, 0.160495, 0.364534],
    [0.000000, 0.163058, 0.371608],
    [0.000000, 0.165621, 0.378769],
    [0.000000, 0.168204, 0.385902],
    [0.000000, 0.170800, 0.393100],
    [0.000000, 0.173420, 0.400353],
    [0.000000, 0.176082, 0.407577],
    [0.000000, 0.178802, 0.414764],
    [0.000000, 0.181610, 0.421859],
    [0.000000, 0.184550, 0.428802],
    [0.000000, 0.186915, 0.435532],
    [0.000000, 0.188769, 0.439563],
    [0.000000, 0.190950, 0.441085],
    [0.000000, 0.193366, 0.441561],
    [0.003602, 0.195911, 0.441564],
    [0.017852, 0.198528, 0.441248],
    [0.032110, 0.201199, 0.440785],
    [0.046205, 0.203903, 0.440196],
    [0.058378, 0.206629, 0.439531],
    [0.068968, 0.209372, 0.438863],
    [0.078624, 0.212122, 0.438105],
    [0.087465, 0.214879, 0.437342],
    [0.095645, 0.217643, 0.436593],
    [0.103401, 0.220406, 0.435790],
    [0.110658, 0.223170, 0.435067],
    [0.117612, 0.225935, 0.434308],
    [0.124291, 0.228697, 0.433547],
    [0.130669, 0.231458, 0.432840],
    [0.136830, 0.234216, 0.432148],
    [0.142852, 0.236972, 0.431404],
    [0.148638, 0.239724, 0.430752],
    [0.154261, 0.242475, 0.430120],
    [0.159733, 0.245221, 0.429528],
    [0.165113, 0.247965, 0.428908],
    [0.170362, 0.250707, 0.428325],
    [0.175490, 0.253444, 0.427790],
    [0.180503, 0.256180, 0.427299],
    [0.185453, 0.258914, 0.426788],
    [0.190303, 0.261644, 0.426329],
    [0.195057, 0.264372, 0.425924],
    [0.199764, 0.267099, 0.425497],
    [0.204385, 0.269823, 0.425126],
    [0.208926, 0.272546, 0.424809],
    [0.213431, 0.275266, 0.424480],
    [0.217863, 0.277985, 0.424206],
    [0.222264, 0.280702, 0.423914],
    [0.226598, 0.283419, 0.423678],
    [0.230871, 0.286134, 0.423498],
    [0.235120, 0.288848, 0.423304],
    [0.239312, 0.291562, 0.423167],
    [0.243485, 0.294274, 0.423014],
    [0.247605, 0.296986, 0.422917],
    [0.251675, 0.299698, 0.422873],
    [0.255731, 0.302409, 0.422814],
    [0.259740, 0.305120, 0.422810],
    [0.263738, 0.307831, 0.422789],
    [0.267693, 0.310542, 0.422821],
    [0.271639, 0.313253, 0.422837],
    [0.275513, 0.315965, 0.422979],
    [0.279411, 0.318677, 0.423031],
    [0.283240, 0.321390, 0.423211],
    [0.287065, 0.324103, 0.423373],
    [0.290884, 0.326816, 0.423517],
    [0.294669, 0.329531, 0.423716],
    [0.298421, 0.332247, 0.423973],
    [0.302169, 0.334963, 0.424213],
    [0.305886, 0.337681, 0.424512],
    [0.309601, 0.340399, 0.424790],
    [0.313287, 0.343120, 0.425120],
    [0.316941, 0.345842, 0.425512],
    [0.320595, 0.348565, 0.425889],
    [0.324250, 0.351289, 0.426250],
    [0.327875, 0.354016, 0.426670],
    [0.331474, 0.356744, 0.427144],
    [0.335073, 0.359474, 0.427605],
    [0.338673, 0.362206, 0.428053],
    [0.342246, 0.364939, 0.428559],
    [0.345793, 0.367676, 0.429127],
    [0.349341, 0.370414, 0.429685],
    [0.352892, 0.373153, 0.430226],
    [0.356418, 0.375896, 0.430823],
    [0.359916, 0.378641, 0.431501],
    [0.363446, 0.381388, 0.432075],
    [0.366923, 0.384139, 0.432796],
    [0.370430, 0.386890, 0.433428],
    [0.373884, 0.389646, 0.434209],
    [0.377371, 0.392404, 0.434890],
    [0.380830, 0.395164, 0.435653],
    [0.384268, 0.397928, 0.436475],
    [0.387705, 0.400694, 0.437305],
    [0.391151, 0.403464, 0.438096],
    [0.394568, 0.406236, 0.438986],
    [0.397991, 0.409011, 0.439848],
    [0.401418, 0.411790, 0.440708],
    [0.404820, 0.414572, 0.441642],
    [0.408226, 0.417357, 0.442570],
    [0.411607, 0.420145, 0.443577],
    [0.414992, 0.422937, 0.444578],
    [0.418383, 0.425733, 0.445560],
    [0.421748, 0.428531, 0.446640],
    [0.425120, 0.431334, 0.447692],
    [0.428462, 0.434140, 0.448864],
    [0.431817, 0.436950, 0.449982],
    [0.435168, 0.439763, 0.451134],
    [0.438504, 0.442580, 0.452341],
    [0.441810, 0.445402, 0.453659],
    [0.445148, 0.448226, 0.454885],
    [0.448447, 0.451053, 0.456264],
    [0.451759, 0.453887, 0.457582],
    [0.455072, 0.456718, 0.458976],
    [0.458366, 0.459552, 0.460457],
    [0.461616, 0.462405, 0.461969],
    [0.464947, 0.465241, 0.463395],
    [0.468254, 0.468083, 0.464908],
    [0.471501, 0.470960, 0.466357],
    [0.474812, 0.473832, 0.467681],
    [0.478186, 0.476699, 0.468845],
    [0.481622, 0.479573, 0.469767],
    [0.485141, 0.482451, 0.470384],
    [0.488697, 0.485318, 0.471008],
    [0.492278, 0.488198, 0.471453],
    [0.495913, 0.491076, 0.471751],
    [0.499552, 0.493960, 0.472032],
    [0.503185, 0.496851, 0.472305],
    [0.506866, 0.499743, 0.472432],
    [0.510540, 0.502643, 0.472550],
    [0.514226, 0.505546, 0.472640],
    [0.517920, 0.508454, 0.472707],
    [0.521643, 0.511367, 0.472639],
    [0.525348, 0.514285, 0.472660],
    [0.529086, 0.517207, 0.472543],
    [0.532829, 0.520135, 0.472401],
    [0.536553, 0.523067, 0.472352],
    [0.540307, 0.526005, 0.472163],
    [0.544069, 0.528948, 0.471947],
    [0.547840, 0.531895, 0.471704],
    [0.551612, 0.534849, 0.471439],
    [0.555393, 0.537807, 0.471147],
    [0.559181, 0.540771, 0.470829],
    [0.562972, 0.543741, 0.470488],
    [0.566802, 0.546715, 0.469988],
    [0.570607, 0.549695, 0.469593],
    [0.574417, 0.552682, 0.469172],
    [0.578236, 0.555673, 0.468724],
    [0.582087, 0.558670, 0.468118],
    [0.585916, 0.561674, 0.467618],
    [0.589753, 0.564682, 0.467090],
    [0.593622, 0.567697, 0.466401],
    [0.597469, 0.570718, 0.465821],
    [0.601354, 0.573743, 0.465074],
    [0.605211, 0.576777, 0.464441],
    [0.609105, 0.579816, 0.463638],
    [0.612977, 0.582861, 0.462950],
    [0.616852, 0.585913, 0.462237],
    [0.620765, 0.588970, 0.461351],
    [0.624654, 0.592034, 0.460583],
    [0.628576, 0.595104, 0.459641],
    [0.632506, 0.598180, 0.458668],
    [0.636412, 0.601264, 0.457818],
    [0.640352, 0.604354, 0.456791],
    [0.644270, 0.607450, 0.455886],
    [0.648222, 0.610553, 0.454801],
    [0.652178, 0.613664, 0.453689],
    [0.656114, 0.616780, 0.452702],
    [0.660082, 0.619904, 0.451534],
    [0.664055, 0.623034, 0.450338],
    [0.668008, 0.626171, 0.449270],
    [0.671991, 0.629316, 0.448018],
    [0.675981, 0.632468, 0.446736],
    [0.679979, 0.635626, 0.445424],
    [0.683950, 0.638793, 0.444251],
    [0.687957, 0.641966, 0.442886],
    [0.691971, 0.645145, 0.441491],
    [0.695985, 0.648334, 0.440072],
    [0.700008, 0.651529, 0.438624],
    [0.704037, 0.654731, 0.437147],
    [0.708067, 0.657942, 0.435647],
    [0.712105, 0.661160, 0.434117],
    [0.716177, 0.664384, 0.432386],
    [0.720222, 0.667618, 0.430805],
    [0.724274, 0.670859, 0.429194],
    [0.728334, 0.674107, 0.427554],
    [0.732422, 0.677364, 0.425717],
    [0.736488, 0.680629, 0.424028],
    [0.740589, 0.683900, 0.422131],
    [0.744664, 0.687181, 0.420393],
    [0.748772, 0.690470, 0.418448],
    [0.752886, 0.693766, 0.416472],
    [0.756975, 0.697071, 0.414659],
    [0.761096, 0.700384, 0.412638],
    [0.765223, 0.703705, 0.410587],
    [0.769353, 0.707035, 0.408516],
    [0.773486, 0.710373, 0.406422],
    [0.777651, 0.713719, 0.404112],
    [0.781795, 0.717074, 0.401966],
    [0.785965, 0.720438, 0.399613],
    [0.790116, 0.723810, 0.397423],
    [0.794298, 0.727190, 0.395016],
    [0.798480, 0.730580, 0.392597],
    [0.802667, 0.733978, 0.390153],
    [0.806859, 0.737385, 0.387684],
    [0.811054, 0.740801, 0.385198],
    [0.815274, 0.744226, 0.382504],
    [0.819499, 0.747659, 0.379785],
    [0.823729, 0.751101, 0.377043],
    [0.827959, 0.754553, 0.374292],
    [0.832192, 0.758014, 0.371529],
    [0.836429, 0.761483, 0.368747],
    [0.840693, 0.764962, 0.365746],
    [0.844957, 0.768450, 0.362741],
    [0.849223, 0.771947, 0.359729],
    [0.853515, 0.775454, 0.356500],
    [0.857809, 0.778969, 0.353259],
    [0.862105, 0.782494, 0.350011],
    [0.866421, 0.786028, 0.346571],
    [0.870717, 0.789572, 0.343333],
    [0.875057, 0.793125, 0.339685],
    [0.879378, 0.796687, 0.336241],
    [0.883720, 0.800258, 0.332599],
    [0.888081, 0.803839, 0.328770],
    [0.892440, 0.807430, 0.324968],
    [0.896818, 0.811030, 0.320982],
    [0.901195, 0.814639, 0.317021],
    [0.905589, 0.818257, 0.312889],
    [0.910000, 0.821885, 0.308594],
    [0.914407, 0.825522, 0.304348],
    [0.918828, 0.829168, 0.299960],
    [0.923279, 0.832822, 0.295244],
    [0.927724, 0.836486, 0.290611],
    [0.932180, 0.840159, 0.285880],
    [0.936660, 0.843841, 0.280876],
    [0.941147, 0.847530, 0.275815],
    [0.945654, 0.851228, 0.270532],
    [0.950178, 0.854933, 0.265085],
    [0.954725, 0.858646, 0.259365],
    [0.959284, 0.862365, 0.253563],
    [0.963872, 0.866089, 0.247445],
    [0.968469, 0.869819, 0.241310],
    [0.973114, 0.873550, 0.234677],
    [0.977780, 0.877281, 0.227954],
    [0.982497, 0.881008, 0.220878],
    [0.987293, 0.884718, 0.213336],
    [0.992218, 0.888385, 0.205468],
    [0.994847, 0.892954, 0.203445],
    [0.995249, 0.898384, 0.207561],
    [0.995503, 0.903866, 0.212370],
    [0.995737, 0.909344, 0.217772],
];

pub(crate) static JET: [[f64; 3]; 256] = [
    [0.000000, 0.000000, 0.500000],
    [0.000000, 0.000000, 0.517825],
    [0.000000, 0.000000, 0.535651],
    [0.000000, 0.000000, 0.553476],
    [0.000000, 0.000000, 0.571301],
    [0.000000, 0.000000, 0.589127],
    [0.000000, 0.000000, 0.606952],
    [0.000000, 0.000000, 0.624777],
    [0.000000, 0.000000, 0.642602],
    [0.000000, 0.000000, 0.660428],
    [0.000000, 0.000000, 0.678253],
    [0.000000, 0.000000, 0.696078],
    [0.000000, 0.000000, 0.713904],
    [0.000000, 0.000000, 0.731729],
    [0.000000, 0.000000, 0.749554],
    [0.000000, 0.000000, 0.767380],
    [0.000000, 0.000000, 0.785205],
    [0.000000, 0.000000, 0.803030],
    [0.000000, 0.000000, 0.820856],
    [0.000000, 0.000000, 0.838681],
    [0.000000, 0.000000, 0.856506],
    [0.000000, 0.000000, 0.874332],
    [0.000000, 0.000000, 0.892157],
    [0.000000, 0.000000, 0.909982],
    [0.000000, 0.000000, 0.927807],
    [0.000000, 0.000000, 0.945633],
    [0.000000, 0.000000, 0.963458],
    [0.000000, 0.000000, 0.981283],
    [0.000000, 0.000000, 0.999109],
    [0.000000, 0.000000, 1.000000],
    [0.000000, 0.000000, 1.000000],
    [0.000000, 0.000000, 1.000000],
    [0.000000, 0.001961, 1.000000],
    [0.000000, 0.017647, 1.000000],
    [0.000000, 0.033333, 1.000000],
    [0.000000, 0.049020, 1.000000],
    [0.000000, 0.064706, 1.000000],
    [0.000000, 0.080392, 1.000000],
    [0.000000, 0.096078, 1.000000],
    [0.000000, 0.111765, 1.000000],
    [0.000000, 0.127451, 1.000000],
    [0.000000, 0.143137, 1.000000],
    [0.000000, 0.158824, 1.000000],
    [0.000000, 0.174510, 1.000000],
    [0.000000, 0.190196, 1.000000],
    [0.000000, 0.205882, 1.000000],
    [0.000000, 0.221569, 1.000000],
    [0.000000, 0.237255, 1.000000],
    [0.000000, 0.252941, 1.000000],
    [0.000000, 0.268627, 1.000000],
    [0.000000, 0.284314, 1.000000],
    [0.000000, 0.300000, 1.000000],
    [0.000000, 0.315686, 1.000000],
    [0.000000, 0.331373, 1.000000],
    [0.000000, 0.347059, 1.000000],
    [0.000000, 0.362745, 1.000000],
    [0.000000, 0.378431, 1.000000],
    [0.000000, 0.394118, 1.000000],
    [0.000000, 0.409804, 1.000000],
    [0.000000, 0.425490, 1.000000],
    [0.000000, 0.441176, 1.000000],
    [0.000000, 0.456863, 1.000000],
    [0.000000, 0.472549, 1.000000],
    [0.000000, 0.488235, 1.000000],
    [0.000000, 0.503922, 1.000000],
    [0.000000, 0.519608, 1.000000],
    [0.000000, 0.535294, 1.000000],
    [0.000000, 0.550980, 1.000000],
    [0.000000, 0.566667, 1.000000],
    [0.000000, 0.582353, 1.000000],
    [0.000000, 0.598039, 1.000000],
    [0.000000, 0.613725, 1.000000],
    [0.000000, 0.629412, 1.000000],
    [0.000000, 0.645098, 1.000000],
    [0.000000, 0.660784, 1.000000],
    [0.000000, 0.676471, 1.000000],
    [0.000000, 0.692157, 1.000000],
    [0.000000, 0.707843, 1.000000],
    [0.000000, 0.723529, 1.000000],
    [0.000000, 0.739216, 1.000000],
    [0.000000, 0.754902, 1.000000],
    [0.000000, 0.770588, 1.000000],
    [0.000000, 0.786275, 1.000000],
    [0.000000, 0.801961, 1.000000],
    [0.000000, 0.817647, 1.000000],
    [0.000000, 0.833333, 1.000000],
    [0.000000, 0.849020, 1.000000],
    [0.000000, 0.864706, 0.996205],
    [0.000000, 0.880392, 0.983555],
    [0.000000, 0.896078, 0.970904],
    [0.009488, 0.911765, 0.958254],
    [0.022138, 0.927451, 0.945604],
    [0.034788, 0.943137, 0.932954],
    [0.047438, 0.958824, 0.920304],
    [0.060089, 0.974510, 0.907653],
    [0.072739, 0.990196, 0.895003],
    [0.085389, 1.000000, 0.882353],
    [0.098039, 1.000000, 0.869703],
    [0.110689, 1.000000, 0.857052],
    [0.123340, 1.000000, 0.844402],
    [0.135990, 1.000000, 0.831752],
    [0.148640, 1.000000, 0.819102],
    [0.161290, 1.000000, 0.806452],
    [0.173941, 1.000000, 0.793801],
    [0.186591, 1.000000, 0.781151],
    [0.199241, 1.000000, 0.768501],
    [0.211891, 1.000000, 0.755851],
    [0.224541, 1.000000, 0.743201],
    [0.237192, 1.000000, 0.730550],
    [0.249842, 1.000000, 0.717900],
    [0.262492, 1.000000, 0.705250],
    [0.275142, 1.000000, 0.692600],
    [0.287793, 1.000000, 0.679949],
    [0.300443, 1.000000, 0.667299],
    [0.313093, 1.000000, 0.654649],
    [0.325743, 1.000000, 0.641999],
    [0.338393, 1.000000, 0.629349],
    [0.351044, 1.000000, 0.616698],
    [0.363694, 1.000000, 0.604048],
    [0.376344, 1.000000, 0.591398],
    [0.388994, 1.000000, 0.578748],
    [0.401645, 1.000000, 0.566097],
    [0.414295, 1.000000, 0.553447],
    [0.426945, 1.000000, 0.540797],
    [0.439595, 1.000000, 0.528147],
    [0.452245, 1.000000, 0.515497],
    [0.464896, 1.000000, 0.502846],
    [0.477546, 1.000000, 0.490196],
    [0.490196, 1.000000, 0.477546],
    [0.502846, 1.000000, 0.464896],
    [0.515497, 1.000000, 0.452245],
    [0.528147, 1.000000, 0.439595],
    [0.540797, 1.000000, 0.426945],
    [0.553447, 1.000000, 0.414295],
    [0.566097, 1.000000, 0.401645],
    [0.578748, 1.000000, 0.388994],
    [0.591398, 1.000000, 0.376344],
    [0.604048, 1.000000, 0.363694],
    [0.616698, 1.000000, 0.351044],
    [0.629349, 1.000000, 0.338393],
    [0.641999, 1.000000, 0.325743],
    [0.654649, 1.000000, 0.313093],
    [0.667299, 1.000000, 0.300443],
    [0.679949, 1.000000, 0.287793],
    [0.692600, 1.000000, 0.275142],
    [0.705250, 1.000000, 0.262492],
    [0.717900, 1.000000, 0.249842],
    [0.730550, 1.000000, 0.237192],
    [0.743201, 1.000000, 0.224541],
    [0.755851, 1.000000, 0.211891],
    [0.768501, 1.000000, 0.199241],
    [0.781151, 1.000000, 0.186591],
    [0.793801, 1.000000, 0.173941],
    [0.806452, 1.000000, 0.161290],
    [0.819102, 1.000000, 0.148640],
    [0.831752, 1.000000, 0.135990],
    [0.844402, 1.000000, 0.123340],
    [0.857052, 1.000000, 0.110689],
    [0.869703, 1.000000, 0.098039],
    [0.882353, 1.000000, 0.085389],
    [0.895003, 1.000000, 0.072739],
    [0.907653, 1.000000, 0.060089],
    [0.920304, 1.000000, 0.047438],
    [0.932954, 1.000000, 0.034788],
    [0.945604, 0.988381, 0.022138],
    [0.958254, 0.973856, 0.009488],
    [0.970904, 0.959332, 0.000000],
    [0.983555, 0.944808, 0.000000],
    [0.996205, 0.930283, 0.000000],
    [1.000000, 0.915759, 0.000000],
    [1.000000, 0.901235, 0.000000],
    [1.000000, 0.886710, 0.000000],
    [1.000000, 0.872186, 0.000000],
    [1.000000, 0.857662, 0.000000],
    [1.000000, 0.843137, 0.000000],
    [1.000000, 0.828613, 0.000000],
    [1.000000, 0.814089, 0.000000],
    [1.000000, 0.799564, 0.000000],
    [1.000000, 0.785040, 0.000000],
    [1.000000, 0.770516, 0.000000],
    [1.000000, 0.755991, 0.000000],
    [1.000000, 0.741467, 0.000000],
    [1.000000, 0.726943, 0.000000],
    [1.000000, 0.712418, 0.000000],
    [1.000000, 0.697894, 0.000000],
    [1.000000, 0.683370, 0.000000],
    [1.000000, 0.668845, 0.000000],
    [1.000000, 0.654321, 0.000000],
    [1.000000, 0.639797, 0.000000],
    [1.000000, 0.625272, 0.000000],
    [1.000000, 0.610748, 0.000000],
    [1.000000, 0.596224, 0.000000],
    [1.000000, 0.581699, 0.000000],
    [1.000000, 0.567175, 0.000000],
    [1.000000, 0.552651, 0.000000],
    [1.000000, 0.538126, 0.000000],
    [1.000000, 0.523602, 0.000000],
    [1.000000, 0.509078, 0.000000],
    [1.000000, 0.494553, 0.000000],
    [1.000000, 0.480029, 0.000000],
    [1.000000, 0.465505, 0.000000],
    [1.000000, 0.450980, 0.000000],
    [1.000000, 0.436456, 0.000000],
    [1.000000, 0.421932, 0.000000],
    [1.000000, 0.407407, 0.000000],
    [1.000000, 0.392883, 0.000000],
    [1.000000, 0.378359, 0.000000],
    [1.000000, 0.363834, 0.000000],
    [1.000000, 0.349310, 0.000000],
    [1.000000, 0.334786, 0.000000],
    [1.000000, 0.320261, 0.000000],
    [1.000000, 0.305737, 0.000000],
    [1.000000, 0.291213, 0.000000],
    [1.000000, 0.276688, 0.000000],
    [1.000000, 0.262164, 0.000000],
    [1.000000, 0.247640, 0.000000],
    [1.000000, 0.233115, 0.000000],
    [1.000000, 0.218591, 0.000000],
    [1.000000, 0.204067, 0.000000],
    [1.000000, 0.189542, 0.000000],
    [1.000000, 0.175018, 0.000000],
    [1.000000, 0.160494, 0.000000],
    [1.000000, 0.145969, 0.000000],
    [1.000000, 0.131445, 0.000000],
    [1.000000, 0.116921, 0.000000],
    [1.000000, 0.102397, 0.000000],
    [1.000000, 0.087872, 0.000000],
    [0.999109, 0.073348, 0.000000],
    [0.981283, 0.058824, 0.000000],
    [0.963458, 0.044299, 0.000000],
    [0.945633, 0.029775, 0.000000],
    [0.927807, 0.015251, 0.000000],
    [0.909982, 0.000726, 0.000000],
    [0.892157, 0.000000, 0.000000],
    [0.874332, 0.000000, 0.000000],
    [0.856506, 0.000000, 0.000000],
    [0.838681, 0.000000, 0.000000],
    [0.820856, 0.000000, 0.000000],
    [0.803030, 0.000000, 0.000000],
    [0.785205, 0.000000, 0.000000],
    [0.767380, 0.000000, 0.000000],
    [0.749554, 0.000000, 0.000000],
    [0.731729, 0.000000, 0.000000],
    [0.713904, 0.000000, 0.000000],
    [0.696078, 0.000000, 0.000000],
    [0.678253, 0.000000, 0.000000],
    [0.660428, 0.000000, 0.000000],
    [0.642602, 0.000000, 0.000000],
    [0.624777, 0.000000, 0.000000],
    [0.606952, 0.000000, 0.000000],
    [0.589127, 0.000000, 0.000000],
    [0.571301, 0.000000, 0.000000],
    [0.553476, 0.000000, 0.000000],
    [0.535651, 0.000000, 0.000000],
    [0.517825, 0.000000, 0.000000],
    [0.500000, 0.000000, 0.000000],
];

pub(crate) static HSV: [[f64; 3]; 256] = [
    [1.000000, 0.000000, 0.000000],
    [1.000000, 0.023162, 0.000000],
    [1.000000, 0.046324, 0.000000],
    [1.000000, 0.069485, 0.000000],
    [1.000000, 0.092647, 0.000000],
    [1.000000, 0.115809, 0.000000],
    [1.000000, 0.138971, 0.000000],
    [1.000000, 0.162133, 0.000000],
    [1.000000, 0.185294, 0.000000],
    [1.000000, 0.208456, 0.000000],
    [1.000000, 0.231618, 0.000000],
    [1.000000, 0.254780, 0.000000],
    [1.000000, 0.277941, 0.000000],
    [1.000000, 0.301103, 0.000000],
    [1.000000, 0.324265, 0.000000],
    [1.000000, 0.347427, 0.000000],
    [1.000000, 0.370589, 0.000000],
    [1.000000, 0.393750, 0.000000],
    [1.000000, 0.416912, 0.000000],
    [1.000000, 0.440074, 0.000000],
    [1.000000, 0.463236, 0.000000],
    [1.000000, 0.486398, 0.000000],
    [1.000000, 0.509559, 0.000000],
    [1.000000, 0.532721, 0.000000],
    [1.000000, 0.555883, 0.000000],
    [1.000000, 0.579045, 0.000000],
    [1.000000, 0.602206, 0.000000],
    [1.000000, 0.625368, 0.000000],
    [1.000000, 0.648530, 0.000000],
    [1.000000, 0.671692, 0.000000],
    [1.000000, 0.694854, 0.000000],
    [1.000000, 0.718015, 0.000000],
    [1.000000, 0.741177, 0.000000],
    [1.000000, 0.764339, 0.000000],
    [1.000000, 0.787501, 0.000000],
    [1.000000, 0.810663, 0.000000],
    [1.000000, 0.833824, 0.000000],
    [1.000000, 0.856986, 0.000000],
    [1.000000, 0.880148, 0.000000],
    [1.000000, 0.903310, 0.000000],
    [1.000000, 0.926472, 0.000000],
    [0.995956, 0.945589, 0.000000],
    [0.988235, 0.961030, 0.000000],
    [0.980514, 0.976471, 0.000000],
    [0.972794, 0.991912, 0.000000],
    [0.957720, 1.000000, 0.000000],
    [0.934558, 1.000000, 0.000000],
    [0.911396, 1.000000, 0.000000],
    [0.888234, 1.000000, 0.000000],
    [0.865072, 1.000000, 0.000000],
    [0.841911, 1.000000, 0.000000],
    [0.818749, 1.000000, 0.000000],
    [0.795587, 1.000000, 0.000000],
    [0.772425, 1.000000, 0.000000],
    [0.749263, 1.000000, 0.000000],
    [0.726102, 1.000000, 0.000000],
    [0.702940, 1.000000, 0.000000],
    [0.679778, 1.000000, 0.000000],
    [0.656616, 1.000000, 0.000000],
    [0.633455, 1.000000, 0.000000],
    [0.610293, 1.000000, 0.000000],
    [0.587131, 1.000000, 0.000000],
    [0.563969, 1.000000, 0.000000],
    [0.540807, 1.000000, 0.000000],
    [0.517646, 1.000000, 0.000000],
    [0.494484, 1.000000, 0.000000],
    [0.471322, 1.000000, 0.000000],
    [0.448160, 1.000000, 0.000000],
    [0.424998, 1.000000, 0.000000],
    [0.401837, 1.000000, 0.000000],
    [0.378675, 1.000000, 0.000000],
    [0.355513, 1.000000, 0.000000],
    [0.332351, 1.000000, 0.000000],
    [0.309189, 1.000000, 0.000000],
    [0.286028, 1.000000, 0.000000],
    [0.262866, 1.000000, 0.000000],
    [0.239704, 1.000000, 0.000000],
    [0.216542, 1.000000, 0.000000],
    [0.193381, 1.000000, 0.000000],
    [0.170219, 1.000000, 0.000000],
    [0.147057, 1.000000, 0.000000],
    [0.123895, 1.000000, 0.000000],
    [0.100733, 1.000000, 0.000000],
    [0.077572, 1.000000, 0.000000],
    [0.054410, 1.000000, 0.000000],
    [0.031249, 1.000000, 0.000001],
    [0.023529, 1.000000, 0.015443],
    [0.015808, 1.000000, 0.030884],
    [0.008088, 1.000000, 0.046325],
    [0.000367, 1.000000, 0.061766],
    [0.000000, 1.000000, 0.084561],
    [0.000000, 1.000000, 0.107722],
    [0.000000, 1.000000, 0.130884],
    [0.000000, 1.000000, 0.154046],
    [0.000000, 1.000000, 0.177207],
    [0.000000, 1.000000, 0.200369],
    [0.000000, 1.000000, 0.223531],
    [0.000000, 1.000000, 0.246692],
    [0.000000, 1.000000, 0.269854],
    [0.000000, 1.000000, 0.293016],
    [0.000000, 1.000000, 0.316177],
    [0.000000, 1.000000, 0.339339],
    [0.000000, 1.000000, 0.362500],
    [0.000000, 1.000000, 0.385662],
    [0.000000, 1.000000, 0.408824],
    [0.000000, 1.000000, 0.431985],
    [0.000000, 1.000000, 0.455147],
    [0.000000, 1.000000, 0.478309],
    [0.000000, 1.000000, 0.501470],
    [0.000000, 1.000000, 0.524632],
    [0.000000, 1.000000, 0.547794],
    [0.000000, 1.000000, 0.570955],
    [0.000000, 1.000000, 0.594117],
    [0.000000, 1.000000, 0.617279],
    [0.000000, 1.000000, 0.640440],
    [0.000000, 1.000000, 0.663602],
    [0.000000, 1.000000, 0.686763],
    [0.000000, 1.000000, 0.709925],
    [0.000000, 1.000000, 0.733087],
    [0.000000, 1.000000, 0.756248],
    [0.000000, 1.000000, 0.779410],
    [0.000000, 1.000000, 0.802572],
    [0.000000, 1.000000, 0.825733],
    [0.000000, 1.000000, 0.848895],
    [0.000000, 1.000000, 0.872057],
    [0.000000, 1.000000, 0.895218],
    [0.000000, 1.000000, 0.918380],
    [0.000000, 1.000000, 0.941542],
    [0.000000, 1.000000, 0.964703],
    [0.000000, 1.000000, 0.987865],
    [0.000000, 0.988973, 1.000000],
    [0.000000, 0.965812, 1.000000],
    [0.000000, 0.942650, 1.000000],
    [0.000000, 0.919488, 1.000000],
    [0.000000, 0.896326, 1.000000],
    [0.000000, 0.873165, 1.000000],
    [0.000000, 0.850003, 1.000000],
    [0.000000, 0.826841, 1.000000],
    [0.000000, 0.803679, 1.000000],
    [0.000000, 0.780517, 1.000000],
    [0.000000, 0.757356, 1.000000],
    [0.000000, 0.734194, 1.000000],
    [0.000000, 0.711032, 1.000000],
    [0.000000, 0.687870, 1.000000],
    [0.000000, 0.664708, 1.000000],
    [0.000000, 0.641547, 1.000000],
    [0.000000, 0.618385, 1.000000],
    [0.000000, 0.595223, 1.000000],
    [0.000000, 0.572061, 1.000000],
    [0.000000, 0.548900, 1.000000],
    [0.000000, 0.525738, 1.000000],
    [0.000000, 0.502576, 1.000000],
    [0.000000, 0.479414, 1.000000],
    [0.000000, 0.456252, 1.000000],
    [0.000000, 0.433091, 1.000000],
    [0.000000, 0.409929, 1.000000],
    [0.000000, 0.386767, 1.000000],
    [0.000000, 0.363605, 1.000000],
    [0.000000, 0.340443, 1.000000],
    [0.000000, 0.317282, 1.000000],
    [0.000000, 0.294120, 1.000000],
    [0.000000, 0.270958, 1.000000],
    [0.000000, 0.247796, 1.000000],
    [0.000000, 0.224634, 1.000000],
    [0.000000, 0.201473, 1.000000],
    [0.000000, 0.178311, 1.000000],
    [0.000000, 0.155149, 1.000000],
    [0.000000, 0.131987, 1.000000],
    [0.000000, 0.108826, 1.000000],
    [0.000000, 0.085664, 1.000000],
    [0.000000, 0.062502, 1.000000],
    [0.007720, 0.047060, 1.000000],
    [0.015441, 0.031619, 1.000000],
    [0.023161, 0.016178, 1.000000],
    [0.030882, 0.000737, 1.000000],
    [0.053307, 0.000000, 1.000000],
    [0.076469, 0.000000, 1.000000],
    [0.099631, 0.000000, 1.000000],
    [0.122792, 0.000000, 1.000000],
    [0.145954, 0.000000, 1.000000],
    [0.169116, 0.000000, 1.000000],
    [0.192278, 0.000000, 1.000000],
    [0.215439, 0.000000, 1.000000],
    [0.238601, 0.000000, 1.000000],
    [0.261763, 0.000000, 1.000000],
    [0.284925, 0.000000, 1.000000],
    [0.308087, 0.000000, 1.000000],
    [0.331248, 0.000000, 1.000000],
    [0.354410, 0.000000, 1.000000],
    [0.377572, 0.000000, 1.000000],
    [0.400734, 0.000000, 1.000000],
    [0.423896, 0.000000, 1.000000],
    [0.447057, 0.000000, 1.000000],
    [0.470219, 0.000000, 1.000000],
    [0.493381, 0.000000, 1.000000],
    [0.516543, 0.000000, 1.000000],
    [0.539705, 0.000000, 1.000000],
    [0.562866, 0.000000, 1.000000],
    [0.586028, 0.000000, 1.000000],
    [0.609190, 0.000000, 1.000000],
    [0.632352, 0.000000, 1.000000],
    [0.655513, 0.000000, 1.000000],
    [0.678675, 0.000000, 1.000000],
    [0.701837, 0.000000, 1.000000],
    [0.724999, 0.000000, 1.000000],
    [0.748161, 0.000000, 1.000000],
    [0.771322, 0.000000, 1.000000],
    [0.794484, 0.000000, 1.000000],
    [0.817646, 0.000000, 1.000000],
    [0.840808, 0.000000, 1.000000],
    [0.863970, 0.000000, 1.000000],
    [0.887131, 0.000000, 1.000000],
    [0.910293, 0.000000, 1.000000],
    [0.933455, 0.000000, 1.000000],
    [0.956617, 0.000000, 1.000000],
    [0.972426, 0.000000, 0.992648],
    [0.980147, 0.000000, 0.977206],
    [0.987867, 0.000000, 0.961765],
    [0.995588, 0.000000, 0.946324],
    [1.000000, 0.000000, 0.927574],
    [1.000000, 0.000000, 0.904413],
    [1.000000, 0.000000, 0.881251],
    [1.000000, 0.000000, 0.858089],
    [1.000000, 0.000000, 0.834927],
    [1.000000, 0.000000, 0.811765],
    [1.000000, 0.000000, 0.788604],
    [1.000000, 0.000000, 0.765442],
    [1.000000, 0.000000, 0.742280],
    [1.000000, 0.000000, 0.719118],
    [1.000000, 0.000000, 0.695956],
    [1.000000, 0.000000, 0.672795],
    [1.000000, 0.000000, 0.649633],
    [1.000000, 0.000000, 0.626471],
    [1.000000, 0.000000, 0.603309],
    [1.000000, 0.000000, 0.580148],
    [1.000000, 0.000000, 0.556986],
    [1.000000, 0.000000, 0.533824],
    [1.000000, 0.000000, 0.510662],
    [1.000000, 0.000000, 0.487500],
    [1.000000, 0.000000, 0.464339],
    [1.000000, 0.000000, 0.441177],
    [1.000000, 0.000000, 0.418015],
    [1.000000, 0.000000, 0.394853],
    [1.000000, 0.000000, 0.371691],
    [1.000000, 0.000000, 0.348530],
    [1.000000, 0.000000, 0.325368],
    [1.000000, 0.000000, 0.302206],
    [1.000000, 0.000000, 0.279044],
    [1.000000, 0.000000, 0.255883],
    [1.000000, 0.000000, 0.232721],
    [1.000000, 0.000000, 0.209559],
    [1.000000, 0.000000, 0.186397],
    [1.000000, 0.000000, 0.163235],
    [1.000000, 0.000000, 0.140074],
    [1.000000, 0.000000, 0.116912],
    [1.000000, 0.000000, 0.093750],
];

pub(crate) static COPPER: [[f64; 3]; 256] = [
    [0.000000, 0.000000, 0.000000],
    [0.004844, 0.003064, 0.001951],
    [0.009689, 0.006127, 0.003902],
    [0.014533, 0.009191, 0.005853],
    [0.019377, 0.012254, 0.007804],
    [0.024221, 0.015318, 0.009755],
    [0.029066, 0.018381, 0.011706],
    [0.033910, 0.021445, 0.013657],
    [0.038754, 0.024508, 0.015608],
    [0.043599, 0.027572, 0.017559],
    [0.048443, 0.030635, 0.019510],
    [0.053287, 0.033699, 0.021461],
    [0.058131, 0.036762, 0.023412],
    [0.062976, 0.039826, 0.025363],
    [0.067820, 0.042889, 0.027314],
    [0.072664, 0.045953, 0.029265],
    [0.077509, 0.049016, 0.031216],
    [0.082353, 0.052080, 0.033167],
    [0.087197, 0.055144, 0.035118],
    [0.092042, 0.058207, 0.037069],
    [0.096886, 0.061271, 0.039020],
    [0.101730, 0.064334, 0.040971],
    [0.106574, 0.067398, 0.042922],
    [0.111419, 0.070461, 0.044873],
    [0.116263, 0.073525, 0.046824],
    [0.121107, 0.076588, 0.048775],
    [0.125952, 0.079652, 0.050725],
    [0.130796, 0.082715, 0.052676],
    [0.135640, 0.085779, 0.054627],
    [0.140484, 0.088842, 0.056578],
    [0.145329, 0.091906, 0.058529],
    [0.150173, 0.094969, 0.060480],
    [0.155017, 0.098033, 0.062431],
    [0.159862, 0.101096, 0.064382],
    [0.164706, 0.104160, 0.066333],
    [0.169550, 0.107224, 0.068284],
    [0.174394, 0.110287, 0.070235],
    [0.179239, 0.113351, 0.072186],
    [0.184083, 0.116414, 0.074137],
    [0.188927, 0.119478, 0.076088],
    [0.193772, 0.122541, 0.078039],
    [0.198616, 0.125605, 0.079990],
    [0.203460, 0.128668, 0.081941],
    [0.208304, 0.131732, 0.083892],
    [0.213149, 0.134795, 0.085843],
    [0.217993, 0.137859, 0.087794],
    [0.222837, 0.140922, 0.089745],
    [0.227682, 0.143986, 0.091696],
    [0.232526, 0.147049, 0.093647],
    [0.237370, 0.150113, 0.095598],
    [0.242214, 0.153176, 0.097549],
    [0.247059, 0.156240, 0.099500],
    [0.251903, 0.159304, 0.101451],
    [0.256747, 0.162367, 0.103402],
    [0.261592, 0.165431, 0.105353],
    [0.266436, 0.168494, 0.107304],
    [0.271280, 0.171558, 0.109255],
    [0.276125, 0.174621, 0.111206],
    [0.280969, 0.177685, 0.113157],
    [0.285813, 0.180748, 0.115108],
    [0.290657, 0.183812, 0.117059],
    [0.295502, 0.186875, 0.119010],
    [0.300346, 0.189939, 0.120961],
    [0.305190, 0.193002, 0.122912],
    [0.310035, 0.196066, 0.124863],
    [0.314879, 0.199129, 0.126814],
    [0.319723, 0.202193, 0.128765],
    [0.324567, 0.205256, 0.130716],
    [0.329412, 0.208320, 0.132667],
    [0.334256, 0.211384, 0.134618],
    [0.339100, 0.214447, 0.136569],
    [0.343945, 0.217511, 0.138520],
    [0.348789, 0.220574, 0.140471],
    [0.353633, 0.223638, 0.142422],
    [0.358477, 0.226701, 0.144373],
    [0.363322, 0.229765, 0.146324],
    [0.368166, 0.232828, 0.148275],
    [0.373010, 0.235892, 0.150225],
    [0.377855, 0.238955, 0.152176],
    [0.382699, 0.242019, 0.154127],
    [0.387543, 0.245082, 0.156078],
    [0.392387, 0.248146, 0.158029],
    [0.397232, 0.251209, 0.159980],
    [0.402076, 0.254273, 0.161931],
    [0.406920, 0.257336, 0.163882],
    [0.411765, 0.260400, 0.165833],
    [0.416609, 0.263464, 0.167784],
    [0.421453, 0.266527, 0.169735],
    [0.426297, 0.269591, 0.171686],
    [0.431142, 0.272654, 0.173637],
    [0.435986, 0.275718, 0.175588],
    [0.440830, 0.278781, 0.177539],
    [0.445675, 0.281845, 0.179490],
    [0.450519, 0.284908, 0.181441],
    [0.455363, 0.287972, 0.183392],
    [0.460208, 0.291035, 0.185343],
    [0.465052, 0.294099, 0.187294],
    [0.469896, 0.297162, 0.189245],
    [0.474740, 0.300226, 0.191196],
    [0.479585, 0.303289, 0.193147],
    [0.484429, 0.306353, 0.195098],
    [0.489273, 0.309416, 0.197049],
    [0.494118, 0.312480, 0.199000],
    [0.498962, 0.315544, 0.200951],
    [0.503806, 0.318607, 0.202902],
    [0.508650, 0.321671, 0.204853],
    [0.513495, 0.324734, 0.206804],
    [0.518339, 0.327798, 0.208755],
    [0.523183, 0.330861, 0.210706],
    [0.528028, 0.333925, 0.212657],
    [0.532872, 0.336988, 0.214608],
    [0.537716, 0.340052, 0.216559],
    [0.542560, 0.343115, 0.218510],
    [0.547405, 0.346179, 0.220461],
    [0.552249, 0.349242, 0.222412],
    [0.557093, 0.352306, 0.224363],
    [0.561938, 0.355369, 0.226314],
    [0.566782, 0.358433, 0.228265],
    [0.571626, 0.361496, 0.230216],
    [0.576470, 0.364560, 0.232167],
    [0.581315, 0.367624, 0.234118],
    [0.586159, 0.370687, 0.236069],
    [0.591003, 0.373751, 0.238020],
    [0.595848, 0.376814, 0.239971],
    [0.600692, 0.379878, 0.241922],
    [0.605536, 0.382941, 0.243873],
    [0.610380, 0.386005, 0.245824],
    [0.615225, 0.389068, 0.247775],
    [0.620069, 0.392132, 0.249725],
    [0.624913, 0.395195, 0.251676],
    [0.629758, 0.398259, 0.253627],
    [0.634602, 0.401322, 0.255578],
    [0.639446, 0.404386, 0.257529],
    [0.644291, 0.407449, 0.259480],
    [0.649135, 0.410513, 0.261431],
    [0.653979, 0.413576, 0.263382],
    [0.658823, 0.416640, 0.265333],
    [0.663668, 0.419704, 0.267284],
    [0.668512, 0.422767, 0.269235],
    [0.673356, 0.425831, 0.271186],
    [0.678201, 0.428894, 0.273137],
    [0.683045, 0.431958, 0.275088],
    [0.687889, 0.435021, 0.277039],
    [0.692733, 0.438085, 0.278990],
    [0.697578, 0.441148, 0.280941],
    [0.702422, 0.444212, 0.282892],
    [0.707266, 0.447275, 0.284843],
    [0.712111, 0.450339, 0.286794],
    [0.716955, 0.453402, 0.288745],
    [0.721799, 0.456466, 0.290696],
    [0.726643, 0.459529, 0.292647],
    [0.731488, 0.462593, 0.294598],
    [0.736332, 0.465656, 0.296549],
    [0.741176, 0.468720, 0.298500],
    [0.746021, 0.471784, 0.300451],
    [0.750865, 0.474847, 0.302402],
    [0.755709, 0.477911, 0.304353],
    [0.760553, 0.480974, 0.306304],
    [0.765398, 0.484038, 0.308255],
    [0.770242, 0.487101, 0.310206],
    [0.775086, 0.490165, 0.312157],
    [0.779931, 0.493228, 0.314108],
    [0.784775, 0.496292, 0.316059],
    [0.789619, 0.499355, 0.318010],
    [0.794463, 0.502419, 0.319961],
    [0.799308, 0.505482, 0.321912],
    [0.804152, 0.508546, 0.323863],
    [0.808996, 0.511609, 0.325814],
    [0.813841, 0.514673, 0.327765],
    [0.818685, 0.517736, 0.329716],
    [0.823529, 0.520800, 0.331667],
    [0.828374, 0.523864, 0.333618],
    [0.833218, 0.526927, 0.335569],
    [0.838062, 0.529991, 0.337520],
    [0.842906, 0.533054, 0.339471],
    [0.847751, 0.536118, 0.341422],
    [0.852595, 0.539181, 0.343373],
    [0.857439, 0.542245, 0.345324],
    [0.862284, 0.545308, 0.347275],
    [0.867128, 0.548372, 0.349225],
    [0.871972, 0.551435, 0.351176],
    [0.876816, 0.554499, 0.353127],
    [0.881661, 0.557562, 0.355078],
    [0.886505, 0.560626, 0.357029],
    [0.891349, 0.563689, 0.358980],
    [0.896194, 0.566753, 0.360931],
    [0.901038, 0.569816, 0.362882],
    [0.905882, 0.572880, 0.364833],
    [0.910726, 0.575944, 0.366784],
    [0.915571, 0.579007, 0.368735],
    [0.920415, 0.582071, 0.370686],
    [0.925259, 0.585134, 0.372637],
    [0.930104, 0.588198, 0.374588],
    [0.934948, 0.591261, 0.376539],
    [0.939792, 0.594325, 0.378490],
    [0.944636, 0.597388, 0.380441],
    [0.949481, 0.600452, 0.382392],
    [0.954325, 0.603515, 0.384343],
    [0.959169, 0.606579, 0.386294],
    [0.964014, 0.609642, 0.388245],
    [0.968858, 0.612706, 0.390196],
    [0.973702, 0.615769, 0.392147],
    [0.978546, 0.618833, 0.394098],
    [0.983391, 0.621896, 0.396049],
    [0.988235, 0.624960, 0.398000],
    [0.993079, 0.628024, 0.399951],
    [0.997924, 0.631087, 0.401902],
    [1.000000, 0.634151, 0.403853],
    [1.000000, 0.637214, 0.405804],
    [1.000000, 0.640278, 0.407755],
    [1.000000, 0.643341, 0.409706],
    [1.000000, 0.646405, 0.411657],
    [1.000000, 0.649468, 0.413608],
    [1.000000, 0.652532, 0.415559],
    [1.000000, 0.655595, 0.417510],
    [1.000000, 0.658659, 0.419461],
    [1.000000, 0.661722, 0.421412],
    [1.000000, 0.664786, 0.423363],
    [1.000000, 0.667849, 0.425314],
    [1.000000, 0.670913, 0.427265],
    [1.000000, 0.673976, 0.429216],
    [1.000000, 0.677040, 0.431167],
    [1.000000, 0.680104, 0.433118],
    [1.000000, 0.683167, 0.435069],
    [1.000000, 0.686231, 0.437020],
    [1.000000, 0.689294, 0.438971],
    [1.000000, 0.692358, 0.440922],
    [1.000000, 0.695421, 0.442873],
    [1.000000, 0.698485, 0.444824],
    [1.000000, 0.701548, 0.446775],
    [1.000000, 0.704612, 0.448725],
    [1.000000, 0.707675, 0.450676],
    [1.000000, 0.710739, 0.452627],
    [1.000000, 0.713802, 0.454578],
    [1.000000, 0.716866, 0.456529],
    [1.000000, 0.719929, 0.458480],
    [1.000000, 0.722993, 0.460431],
    [1.000000, 0.726056, 0.462382],
    [1.000000, 0.729120, 0.464333],
    [1.000000, 0.732184, 0.466284],
    [1.000000, 0.735247, 0.468235],
    [1.000000, 0.738311, 0.470186],
    [1.000000, 0.741374, 0.472137],
    [1.000000, 0.744438, 0.474088],
    [1.000000, 0.747501, 0.476039],
    [1.000000, 0.750565, 0.477990],
    [1.000000, 0.753628, 0.479941],
    [1.000000, 0.756692, 0.481892],
    [1.000000, 0.759755, 0.483843],
    [1.000000, 0.762819, 0.485794],
    [1.000000, 0.765882, 0.487745],
    [1.000000, 0.768946, 0.489696],
    [1.000000, 0.772009, 0.491647],
    [1.000000, 0.775073, 0.493598],
    [1.000000, 0.778136, 0.495549],
    [1.000000, 0.781200, 0.497500],
];

pub(crate) static GRAY: [[f64; 3]; 256] = [
    [0.000000, 0.000000, 0.000000],
    [0.003922, 0.003922, 0.003922],
    [0.007843, 0.007843, 0.007843],
    [0.011765, 0.011765, 0.011765],
    [0.015686, 0.015686, 0.015686],
    [0.019608, 0.019608, 0.019608],
    [0.023529, 0.023529, 0.023529],
    [0.027451, 0.027451, 0.027451],
    [0.031373, 0.031373, 0.031373],
    [0.035294, 0.035294, 0.035294],
    [0.039216, 0.039216, 0.039216],
    [0.043137, 0.043137, 0.043137],
    [0.047059, 0.047059, 0.047059],
    [0.050980, 0.050980, 0.050980],
    [0.054902, 0.054902, 0.054902],
    [0.058824, 0.058824, 0.058824],
    [0.062745, 0.062745, 0.062745],
    [0.066667, 0.066667, 0.066667],
    [0.070588, 0.070588, 0.070588],
    [0.074510, 0.074510, 0.074510],
    [0.078431, 0.078431, 0.078431],
    [0.082353, 0.082353, 0.082353],
    [0.086275, 0.086275, 0.086275],
    [0.090196, 0.090196, 0.090196],
    [0.094118, 0.094118, 0.094118],
    [0.098039, 0.098039, 0.098039],
    [0.101961, 0.101961, 0.101961],
    [0.105882, 0.105882, 0.105882],
    [0.109804, 0.109804, 0.109804],
    [0.113725, 0.113725, 0.113725],
    [0.117647, 0.117647, 0.117647],
    [0.121569, 0.121569, 0.121569],
    [0.125490, 0.125490, 0.125490],
    [0.129412, 0.129412, 0.129412],
    [0.133333, 0.133333, 0.133333],
    [0.137255, 0.137255, 0.137255],
    [0.141176, 0.141176, 0.141176],
    [0.145098, 0.145098, 0.145098],
    [0.149020, 0.149020, 0.149020],
    [0.152941, 0.152941, 0.152941],
    [0.156863, 0.156863, 0.156863],
    [0.160784, 0.160784, 0.160784],
    [0.164706, 0.164706, 0.164706],
    [0.168627, 0.168627, 0.168627],
    [0.172549, 0.172549, 0.172549],
    [0.176471, 0.176471, 0.176471],
    [0.180392, 0.180392, 0.180392],
    [0.184314, 0.184314, 0.184314],
    [0.188235, 0.188235, 0.188235],
    [0.192157, 0.192157, 0.192157],
    [0.196078, 0.196078, 0.196078],
    [0.200000, 0.200000, 0.200000],
    [0.203922, 0.203922, 0.203922],
    [0.207843, 0.207843, 0.207843],
    [0.211765, 0.211765, 0.211765],
    [0.215686, 0.215686, 0.215686],
    [0.219608, 0.219608, 0.219608],
    [0.223529, 0.223529, 0.223529],
    [0.227451, 0.227451, 0.227451],
    [0.231373, 0.231373, 0.231373],
    [0.235294, 0.235294, 0.235294],
    [0.239216, 0.239216, 0.239216],
    [0.243137, 0.243137, 0.243137],
    [0.247059, 0.247059, 0.247059],
    [0.250980, 0.250980, 0.250980],
    [0.254902, 0.254902, 0.254902],
    [0.258824, 0.258824, 0.258824],
    [0.262745, 0.262745, 0.262745],
    [0.266667, 0.266667, 0.266667],
    [0.270588, 0.270588, 0.270588],
    [0.274510, 0.274510, 0.274510],
    [0.278431, 0.278431, 0.278431],
    [0.282353, 0.282353, 0.282353],
    [0.286275, 0.286275, 0.286275],
    [0.290196, 0.290196, 0.290196],
    [0.294118, 0.294118, 0.294118],
    [0.298039, 0.298039, 0.298039],
    [0.301961, 0.301961, 0.301961],
    [0.305882, 0.305882, 0.305882],
    [0.309804, 0.309804, 0.309804],
    [0.313725, 0.313725, 0.313725],
    [0.317647, 0.317647, 0.317647],
    [0.321569, 0.321569, 0.321569],
    [0.325490, 0.325490, 0.325490],
    [0.329412, 0.329412, 0.329412],
    [0.333333, 0.333333, 0.333333],
    [0.337255, 0.337255, 0.337255],
    [0.341176, 0.341176, 0.341176],
    [0.345098, 0.345098, 0.345098],
    [0.349020, 0.349020, 0.349020],
    [0.352941, 0.352941, 0.352941],
    [0.356863, 0.356863, 0.356863],
    [0.360784, 0.360784, 0.360784],
    [0.364706, 0.364706, 0.364706],
    [0.368627, 0.368627, 0.368627],
    [0.372549, 0.372549, 0.372549],
    [0.376471, 0.376471, 0.376471],
    [0.380392, 0.380392, 0.380392],
    [0.384314, 0.384314, 0.384314],
    [0.388235, 0.388235, 0.388235],
    [0.392157, 0.392157, 0.392157],
    [0.396078, 0.396078, 0.396078],
    [0.400000, 0.400000, 0.400000],
    [0.403922, 0.403922, 0.403922],
    [0.407843, 0.407843, 0.407843],
    [0.411765, 0.411765, 0.411765],
    [0.415686, 0.415686, 0.415686],
    [0.419608, 0.419608, 0.419608],
    [0.423529, 0.423529, 0.423529],
    [0.427451, 0.427451, 0.427451],
    [0.431373, 0.431373, 0.431373],
    [0.435294, 0.435294, 0.435294],
    [0.439216, 0.439216, 0.439216],
    [0.443137, 0.443137, 0.443137],
    [0.447059, 0.447059, 0.447059],
    [0.450980, 0.450980, 0.450980],
    [0.454902, 0.454902, 0.454902],
    [0.458824, 0.458824, 0.458824],
    [0.462745, 0.462745, 0.462745],
    [0.466667, 0.466667, 0.466667],
    [0.470588, 0.470588, 0.470588],
    [0.474510, 0.474510, 0.474510],
    [0.478431, 0.478431, 0.478431],
    [0.482353, 0.482353, 0.482353],
    [0.486275, 0.486275, 0.486275],
    [0.490196, 0.490196, 0.490196],
    [0.494118, 0.494118, 0.494118],
    [0.498039, 0.498039, 0.498039],
    [0.501961, 0.501961, 0.501961],
    [0.505882, 0.505882, 0.505882],
    [0.509804, 0.509804, 0.509804],
    [0.513725, 0.513725, 0.513725],
    [0.517647, 0.517647, 0.517647],
    [0.521569, 0.521569, 0.521569],
    [0.525490, 0.525490, 0.525490],
    [0.529412, 0.529412, 0.529412],
    [0.533333, 0.533333, 0.533333],
    [0.537255, 0.537255, 0.537255],
    [0.541176, 0.541176, 0.541176],
    [0.545098, 0.545098, 0.545098],
    [0.549020, 0.549020, 0.549020],
    [0.552941, 0.552941, 0.552941],
    [0.556863, 0.556863, 0.556863],
    [0.560784, 0.560784, 0.560784],
    [0.564706, 0.564706, 0.564706],
    [0.568627, 0.568627, 0.568627],
    [0.572549, 0.572549, 0.572549],
    [0.576471, 0.576471, 0.576471],
    [0.580392, 0.580392, 0.580392],
    [0.584314, 0.584314, 0.584314],
    [0.588235, 0.588235, 0.588235],
    [0.592157, 0.592157, 0.592157],
    [0.596078, 0.596078, 0.596078],
    [0.600000, 0.600000, 0.600000],
    [0.603922, 0.603922, 0.603922],
    [0.607843, 0.607843, 0.607843],
    [0.611765, 0.611765, 0.611765],
    [0.615686, 0.615686, 0.615686],
    [0.619608, 0.619608, 0.619608],
    [0.623529, 0.623529, 0.623529],
    [0.627451, 0.627451, 0.627451],
    [0.631373, 0.631373, 0.631373],
    [0.635294, 0.635294, 0.635294],
    [0.639216, 0.639216, 0.639216],
    [0.643137, 0.643137, 0.643137],
    [0.647059, 0.647059, 0.647059],
    [0.650980, 0.650980, 0.650980],
    [0.654902, 0.654902, 0.654902],
    [0.658824, 0.658824, 0.658824],
    [0.662745, 0.662745, 0.662745],
    [0.666667, 0.666667, 0.666667],
    [0.670588, 0.670588, 0.670588],
    [0.674510, 0.674510, 0.674510],
    [0.678431, 0.678431, 0.678431],
    [0.682353, 0.682353, 0.682353],
    [0.686275, 0.686275, 0.686275],
    [0.690196, 0.690196, 0.690196],
    [0.694118, 0.694118, 0.694118],
    [0.698039, 0.698039, 0.698039],
    [0.701961, 0.701961, 0.701961],
    [0.705882, 0.705882, 0.705882],
    [0.709804, 0.709804, 0.709804],
    [0.713725, 0.713725, 0.713725],
    [0.717647, 0.717647, 0.717647],
    [0.721569, 0.721569, 0.721569],
    [0.725490, 0.725490, 0.725490],
    [0.729412, 0.729412, 0.729412],
    [0.733333, 0.733333, 0.733333],
    [0.737255, 0.737255, 0.737255],
    [0.741176, 0.741176, 0.741176],
    [0.745098, 0.745098, 0.745098],
    [0.749020, 0.749020, 0.749020],
    [0.752941, 0.752941, 0.752941],
    [0.756863, 0.756863, 0.756863],
    [0.760784, 0.760784, 0.760784],
    [0.764706, 0.764706, 0.764706],
    [0.768627, 0.768627, 0.768627],
    [0.772549, 0.772549, 0.772549],
    [0.776471, 0.776471, 0.776471],
    [0.780392, 0.780392, 0.780392],
    [0.784314, 0.784314, 0.784314],
    [0.788235, 0.788235, 0.788235],
    [0.792157, 0.792157, 0.792157],
    [0.796078, 0.796078, 0.796078],
    [0.800000, 0.800000, 0.800000],
    [0.803922, 0.803922, 0.803922],
    [0.807843, 0.807843, 0.807843],
    [0.811765, 0.811765, 0.811765],
    [0.815686, 0.815686, 0.815686],
    [0.819608, 0.819608, 0.819608],
    [0.823529, 0.823529, 0.823529],
    [0.827451, 0.827451, 0.827451],
    [0.831373, 0.831373, 0.831373],
    [0.835294, 0.835294, 0.835294],
    [0.839216, 0.839216, 0.839216],
    [0.843137, 0.843137, 0.843137],
    [0.847059, 0.847059, 0.847059],
    [0.850980, 0.850980, 0.850980],
    [0.854902, 0.854902, 0.854902],
    [0.858824, 0.858824, 0.858824],
    [0.862745, 0.862745, 0.862745],
    [0.866667, 0.866667, 0.866667],
    [0.870588, 0.870588, 0.870588],
    [0.874510, 0.874510, 0.874510],
    [0.878431, 0.878431, 0.878431],
    [0.882353, 0.882353, 0.882353],
    [0.886275, 0.886275, 0.886275],
    [0.890196, 0.890196, 0.890196],
    [0.894118, 0.894118, 0.894118],
    [0.898039, 0.898039, 0.898039],
    [0.901961, 0.901961, 0.901961],
    [0.905882, 0.905882, 0.905882],
    [0.909804, 0.909804, 0.909804],
    [0.913725, 0.913725, 0.913725],
    [0.917647, 0.917647, 0.917647],
    [0.921569, 0.921569, 0.921569],
    [0.925490, 0.925490, 0.925490],
    [0.929412, 0.929412, 0.929412],
    [0.933333, 0.933333, 0.933333],
    [0.937255, 0.937255, 0.937255],
    [0.941176, 0.941176, 0.941176],
    [0.945098, 0.945098, 0.945098],
    [0.949020, 0.949020, 0.949020],
    [0.952941, 0.952941, 0.952941],
    [0.956863, 0.956863, 0.956863],
    [0.960784, 0.960784, 0.960784],
    [0.964706, 0.964706, 0.964706],
    [0.968627, 0.968627, 0.968627],
    [0.972549, 0.972549, 0.972549],
    [0.976471, 0.976471, 0.976471],
    [0.980392, 0.980392, 0.980392],
    [0.984314, 0.984314, 0.984314],
    [0.988235, 0.988235, 0.988235],
    [0.992157, 0.992157, 0.992157],
    [0.996078, 0.996078, 0.996078],
    [1.000000, 1.000000, 1.000000],
];

pub(crate) static HOT: [[f64; 3]; 256] = [
    [0.041600, 0.000000, 0.000000],
    [0.051895, 0.000000, 0.000000],
    [0.062190, 0.000000, 0.000000],
    [0.072485, 0.000000, 0.000000],
    [0.082779, 0.000000, 0.000000],
    [0.093074, 0.000000, 0.000000],
    [0.103369, 0.000000, 0.000000],
    [0.113664, 0.000000, 0.000000],
    [0.123959, 0.000000, 0.000000],
    [0.134254, 0.000000, 0.000000],
    [0.144548, 0.000000, 0.000000],
    [0.154843, 0.000000, 0.000000],
    [0.165138, 0.000000, 0.000000],
    [0.175433, 0.000000, 0.000000],
    [0.185728, 0.000000, 0.000000],
    [0.196023, 0.000000, 0.000000],
    [0.206318, 0.000000, 0.000000],
    [0.216612, 0.000000, 0.000000],
    [0.226907, 0.000000, 0.000000],
    [0.237202, 0.000000, 0.000000],
    [0.247497, 0.000000, 0.000000],
    [0.257792, 0.000000, 0.000000],
    [0.268087, 0.000000, 0.000000],
    [0.278381, 0.000000, 0.000000],
    [0.288676, 0.000000, 0.000000],
    [0.298971, 0.000000, 0.000000],
    [0.309266, 0.000000, 0.000000],
    [0.319561, 0.000000, 0.000000],
    [0.329856, 0.000000, 0.000000],
    [0.340150, 0.000000, 0.000000],
    [0.350445, 0.000000, 0.000000],
    [0.360740, 0.000000, 0.000000],
    [0.371035, 0.000000, 0.000000],
    [0.381330, 0.000000, 0.000000],
    [0.391625, 0.000000, 0.000000],
    [0.401920, 0.000000, 0.000000],
    [0.412214, 0.000000, 0.000000],
    [0.422509, 0.000000, 0.000000],
    [0.432804, 0.000000, 0.000000],
    [0.443099, 0.000000, 0.000000],
    [0.453394, 0.000000, 0.000000],
    [0.463689, 0.000000, 0.000000],
    [0.473983, 0.000000, 0.000000],
    [0.484278, 0.000000, 0.000000],
    [0.494573, 0.000000, 0.000000],
    [0.504868, 0.000000, 0.000000],
    [0.515163, 0.000000, 0.000000],
    [0.525458, 0.000000, 0.000000],
    [0.535753, 0.000000, 0.000000],
    [0.546047, 0.000000, 0.000000],
    [0.556342, 0.000000, 0.000000],
    [0.566637, 0.000000, 0.000000],
    [0.576932, 0.000000, 0.000000],
    [0.587227, 0.000000, 0.000000],
    [0.597522, 0.000000, 0.000000],
    [0.607816, 0.000000, 0.000000],
    [0.618111, 0.000000, 0.000000],
    [0.628406, 0.000000, 0.000000],
    [0.638701, 0.000000, 0.000000],
    [0.648996, 0.000000, 0.000000],
    [0.659291, 0.000000, 0.000000],
    [0.669585, 0.000000, 0.000000],
    [0.679880, 0.000000, 0.000000],
    [0.690175, 0.000000, 0.000000],
    [0.700470, 0.000000, 0.000000],
    [0.710765, 0.000000, 0.000000],
    [0.721060, 0.000000, 0.000000],
    [0.731355, 0.000000, 0.000000],
    [0.741649, 0.000000, 0.000000],
    [0.751944, 0.000000, 0.000000],
    [0.762239, 0.000000, 0.000000],
    [0.772534, 0.000000, 0.000000],
    [0.782829, 0.000000, 0.000000],
    [0.793124, 0.000000, 0.000000],
    [0.803418, 0.000000, 0.000000],
    [0.813713, 0.000000, 0.000000],
    [0.824008, 0.000000, 0.000000],
    [0.834303, 0.000000, 0.000000],
    [0.844598, 0.000000, 0.000000],
    [0.854893, 0.000000, 0.000000],
    [0.865188, 0.000000, 0.000000],
    [0.875482, 0.000000, 0.000000],
    [0.885777, 0.000000, 0.000000],
    [0.896072, 0.000000, 0.000000],
    [0.906367, 0.000000, 0.000000],
    [0.916662, 0.000000, 0.000000],
    [0.926957, 0.000000, 0.000000],
    [0.937251, 0.000000, 0.000000],
    [0.947546, 0.000000, 0.000000],
    [0.957841, 0.000000, 0.000000],
    [0.968136, 0.000000, 0.000000],
    [0.978431, 0.000000, 0.000000],
    [0.988726, 0.000000, 0.000000],
    [0.999020, 0.000000, 0.000000],
    [1.000000, 0.009315, 0.000000],
    [1.000000, 0.019609, 0.000000],
    [1.000000, 0.029903, 0.000000],
    [1.000000, 0.040197, 0.000000],
    [1.000000, 0.050491, 0.000000],
    [1.000000, 0.060785, 0.000000],
    [1.000000, 0.071079, 0.000000],
    [1.000000, 0.081373, 0.000000],
    [1.000000, 0.091667, 0.000000],
    [1.000000, 0.101962, 0.000000],
    [1.000000, 0.112256, 0.000000],
    [1.000000, 0.122550, 0.000000],
    [1.000000, 0.132844, 0.000000],
    [1.000000, 0.143138, 0.000000],
    [1.000000, 0.153432, 0.000000],
    [1.000000, 0.163726, 0.000000],
    [1.000000, 0.174020, 0.000000],
    [1.000000, 0.184314, 0.000000],
    [1.000000, 0.194608, 0.000000],
    [1.000000, 0.204903, 0.000000],
    [1.000000, 0.215197, 0.000000],
    [1.000000, 0.225491, 0.000000],
    [1.000000, 0.235785, 0.000000],
    [1.000000, 0.246079, 0.000000],
    [1.000000, 0.256373, 0.000000],
    [1.000000, 0.266667, 0.000000],
    [1.000000, 0.276961, 0.000000],
    [1.000000, 0.287255, 0.000000],
    [1.000000, 0.297549, 0.000000],
    [1.000000, 0.307844, 0.000000],
    [1.000000, 0.318138, 0.000000],
    [1.000000, 0.328432, 0.000000],
    [1.000000, 0.338726, 0.000000],
    [1.000000, 0.349020, 0.000000],
    [1.000000, 0.359314, 0.000000],
    [1.000000, 0.369608, 0.000000],
    [1.000000, 0.379902, 0.000000],
    [1.000000, 0.390196, 0.000000],
    [1.000000, 0.400491, 0.000000],
    [1.000000, 0.410785, 0.000000],
    [1.000000, 0.421079, 0.000000],
    [1.000000, 0.431373, 0.000000],
    [1.000000, 0.441667, 0.000000],
    [1.000000, 0.451961, 0.000000],
    [1.000000, 0.462255, 0.000000],
    [1.000000, 0.472549, 0.000000],
    [1.000000, 0.482843, 0.000000],
    [1.000000, 0.493137, 0.000000],
    [1.000000, 0.503432, 0.000000],
    [1.000000, 0.513726, 0.000000],
    [1.000000, 0.524020, 0.000000],
    [1.000000, 0.534314, 0.000000],
    [1.000000, 0.544608, 0.000000],
    [1.000000, 0.554902, 0.000000],
    [1.000000, 0.565196, 0.000000],
    [1.000000, 0.575490, 0.000000],
    [1.000000, 0.585784, 0.000000],
    [1.000000, 0.596078, 0.000000],
    [1.000000, 0.606373, 0.000000],
    [1.000000, 0.616667, 0.000000],
    [1.000000, 0.626961, 0.000000],
    [1.000000, 0.637255, 0.000000],
    [1.000000, 0.647549, 0.000000],
    [1.000000, 0.657843, 0.000000],
    [1.000000, 0.668137, 0.000000],
    [1.000000, 0.678431, 0.000000],
    [1.000000, 0.688725, 0.000000],
    [1.000000, 0.699019, 0.000000],
    [1.000000, 0.709314, 0.000000],
    [1.000000, 0.719608, 0.000000],
    [1.000000, 0.729902, 0.000000],
    [1.000000, 0.740196, 0.000000],
    [1.000000, 0.750490, 0.000000],
    [1.000000, 0.760784, 0.000000],
    [1.000000, 0.771078, 0.000000],
    [1.000000, 0.781372, 0.000000],
    [1.000000, 0.791666, 0.000000],
    [1.000000, 0.801960, 0.000000],
    [1.000000, 0.812255, 0.000000],
    [1.000000, 0.822549, 0.000000],
    [1.000000, 0.832843, 0.000000],
    [1.000000, 0.843137, 0.000000],
    [1.000000, 0.853431, 0.000000],
    [1.000000, 0.863725, 0.000000],
    [1.000000, 0.874019, 0.000000],
    [1.000000, 0.884313, 0.000000],
    [1.000000, 0.894607, 0.000000],
    [1.000000, 0.904901, 0.000000],
    [1.000000, 0.915196, 0.000000],
    [1.000000, 0.925490, 0.000000],
    [1.000000, 0.935784, 0.000000],
    [1.000000, 0.946078, 0.000000],
    [1.000000, 0.956372, 0.000000],
    [1.000000, 0.966666, 0.000000],
    [1.000000, 0.976960, 0.000000],
    [1.000000, 0.987254, 0.000000],
    [1.000000, 0.997548, 0.000000],
    [1.000000, 1.000000, 0.011764],
    [1.000000, 1.000000, 0.027205],
    [1.000000, 1.000000, 0.042646],
    [1.000000, 1.000000, 0.058087],
    [1.000000, 1.000000, 0.073528],
    [1.000000, 1.000000, 0.088970],
    [1.000000, 1.000000, 0.104411],
    [1.000000, 1.000000, 0.119852],
    [1.000000, 1.000000, 0.135293],
    [1.000000, 1.000000, 0.150734],
    [1.000000, 1.000000, 0.166176],
    [1.000000, 1.000000, 0.181617],
    [1.000000, 1.000000, 0.197058],
    [1.000000, 1.000000, 0.212499],
    [1.000000, 1.000000, 0.227940],
    [1.000000, 1.000000, 0.243382],
    [1.000000, 1.000000, 0.258823],
    [1.000000, 1.000000, 0.274264],
    [1.000000, 1.000000, 0.289705],
    [1.000000, 1.000000, 0.305146],
    [1.000000, 1.000000, 0.320588],
    [1.000000, 1.000000, 0.336029],
    [1.000000, 1.000000, 0.351470],
    [1.000000, 1.000000, 0.366911],
    [1.000000, 1.000000, 0.382352],
    [1.000000, 1.000000, 0.397794],
    [1.000000, 1.000000, 0.413235],
    [1.000000, 1.000000, 0.428676],
    [1.000000, 1.000000, 0.444117],
    [1.000000, 1.000000, 0.459558],
    [1.000000, 1.000000, 0.474999],
    [1.000000, 1.000000, 0.490441],
    [1.000000, 1.000000, 0.505882],
    [1.000000, 1.000000, 0.521323],
    [1.000000, 1.000000, 0.536764],
    [1.000000, 1.000000, 0.552205],
    [1.000000, 1.000000, 0.567647],
    [1.000000, 1.000000, 0.583088],
    [1.000000, 1.000000, 0.598529],
    [1.000000, 1.000000, 0.613970],
    [1.000000, 1.000000, 0.629411],
    [1.000000, 1.000000, 0.644853],
    [1.000000, 1.000000, 0.660294],
    [1.000000, 1.000000, 0.675735],
    [1.000000, 1.000000, 0.691176],
    [1.000000, 1.000000, 0.706617],
    [1.000000, 1.000000, 0.722059],
    [1.000000, 1.000000, 0.737500],
    [1.000000, 1.000000, 0.752941],
    [1.000000, 1.000000, 0.768382],
    [1.000000, 1.000000, 0.783823],
    [1.000000, 1.000000, 0.799265],
    [1.000000, 1.000000, 0.814706],
    [1.000000, 1.000000, 0.830147],
    [1.000000, 1.000000, 0.845588],
    [1.000000, 1.000000, 0.861029],
    [1.000000, 1.000000, 0.876470],
    [1.000000, 1.000000, 0.891912],
    [1.000000, 1.000000, 0.907353],
    [1.000000, 1.000000, 0.922794],
    [1.000000, 1.000000, 0.938235],
    [1.000000, 1.000000, 0.953676],
    [1.000000, 1.000000, 0.969118],
    [1.000000, 1.000000, 0.984559],
    [1.000000, 1.000000, 1.000000],
];

pub(crate) static BONE: [[f64; 3]; 256] = [
    [0.000000, 0.000000, 0.000000],
    [0.003431, 0.003431, 0.004774],
    [0.006863, 0.006863, 0.009548],
    [0.010294, 0.010294, 0.014322],
    [0.013725, 0.013725, 0.019096],
    [0.017157, 0.017157, 0.023870],
    [0.020588, 0.020588, 0.028645],
    [0.024020, 0.024020, 0.033419],
    [0.027451, 0.027451, 0.038193],
    [0.030882, 0.030882, 0.042967],
    [0.034314, 0.034314, 0.047741],
    [0.037745, 0.037745, 0.052515],
    [0.041176, 0.041176, 0.057289],
    [0.044608, 0.044608, 0.062063],
    [0.048039, 0.048039, 0.066837],
    [0.051471, 0.051471, 0.071611],
    [0.054902, 0.054902, 0.076385],
    [0.058333, 0.058333, 0.081159],
    [0.061765, 0.061765, 0.085934],
    [0.065196, 0.065196, 0.090708],
    [0.068627, 0.068627, 0.095482],
    [0.072059, 0.072059, 0.100256],
    [0.075490, 0.075490, 0.105030],
    [0.078922, 0.078922, 0.109804],
    [0.082353, 0.082353, 0.114578],
    [0.085784, 0.085784, 0.119352],
    [0.089216, 0.089216, 0.124126],
    [0.092647, 0.092647, 0.128900],
    [0.096078, 0.096078, 0.133674],
    [0.099510, 0.099510, 0.138448],
    [0.102941, 0.102941, 0.143223],
    [0.106373, 0.106373, 0.147997],
    [0.109804, 0.109804, 0.152771],
    [0.113235, 0.113235, 0.157545],
    [0.116667, 0.116667, 0.162319],
    [0.120098, 0.120098, 0.167093],
    [0.123529, 0.123529, 0.171867],
    [0.126961, 0.126961, 0.176641],
    [0.130392, 0.130392, 0.181415],
    [0.133824, 0.133823, 0.186189],
    [0.137255, 0.137255, 0.190963],
    [0.140686, 0.140686, 0.195737],
    [0.144118, 0.144118, 0.200512],
    [0.147549, 0.147549, 0.205286],
    [0.150980, 0.150980, 0.210060],
    [0.154412, 0.154412, 0.214834],
    [0.157843, 0.157843, 0.219608],
    [0.161275, 0.161274, 0.224382],
    [0.164706, 0.164706, 0.229156],
    [0.168137, 0.168137, 0.233930],
    [0.171569, 0.171569, 0.238704],
    [0.175000, 0.175000, 0.243478],
    [0.178431, 0.178431, 0.248252],
    [0.181863, 0.181863, 0.253026],
    [0.185294, 0.185294, 0.257801],
    [0.188725, 0.188725, 0.262575],
    [0.192157, 0.192157, 0.267349],
    [0.195588, 0.195588, 0.272123],
    [0.199020, 0.199020, 0.276897],
    [0.202451, 0.202451, 0.281671],
    [0.205882, 0.205882, 0.286445],
    [0.209314, 0.209314, 0.291219],
    [0.212745, 0.212745, 0.295993],
    [0.216176, 0.216176, 0.300767],
    [0.219608, 0.219608, 0.305541],
    [0.223039, 0.223039, 0.310315],
    [0.226471, 0.226470, 0.315090],
    [0.229902, 0.229902, 0.319864],
    [0.233333, 0.233333, 0.324638],
    [0.236765, 0.236765, 0.329412],
    [0.240196, 0.240196, 0.334186],
    [0.243627, 0.243627, 0.338960],
    [0.247059, 0.247059, 0.343734],
    [0.250490, 0.250490, 0.348508],
    [0.253922, 0.253921, 0.353282],
    [0.257353, 0.257353, 0.358056],
    [0.260784, 0.260784, 0.362830],
    [0.264216, 0.264216, 0.367604],
    [0.267647, 0.267647, 0.372379],
    [0.271078, 0.271078, 0.377153],
    [0.274510, 0.274510, 0.381927],
    [0.277941, 0.277941, 0.386701],
    [0.281373, 0.281372, 0.391475],
    [0.284804, 0.284804, 0.396249],
    [0.288235, 0.288235, 0.401023],
    [0.291667, 0.291667, 0.405797],
    [0.295098, 0.295098, 0.410571],
    [0.298529, 0.298529, 0.415345],
    [0.301961, 0.301961, 0.420119],
    [0.305392, 0.305392, 0.424893],
    [0.308824, 0.308823, 0.429668],
    [0.312255, 0.312255, 0.434442],
    [0.315686, 0.315686, 0.439216],
    [0.319118, 0.319118, 0.443990],
    [0.322549, 0.323713, 0.447549],
    [0.325980, 0.328431, 0.450980],
    [0.329412, 0.333150, 0.454412],
    [0.332843, 0.337868, 0.457843],
    [0.336275, 0.342586, 0.461274],
    [0.339706, 0.347304, 0.464706],
    [0.343137, 0.352022, 0.468137],
    [0.346569, 0.356740, 0.471569],
    [0.350000, 0.361458, 0.475000],
    [0.353431, 0.366176, 0.478431],
    [0.356863, 0.370895, 0.481863],
    [0.360294, 0.375613, 0.485294],
    [0.363725, 0.380331, 0.488725],
    [0.367157, 0.385049, 0.492157],
    [0.370588, 0.389767, 0.495588],
    [0.374020, 0.394485, 0.499019],
    [0.377451, 0.399203, 0.502451],
    [0.380882, 0.403922, 0.505882],
    [0.384314, 0.408640, 0.509314],
    [0.387745, 0.413358, 0.512745],
    [0.391176, 0.418076, 0.516176],
    [0.394608, 0.422794, 0.519608],
    [0.398039, 0.427512, 0.523039],
    [0.401471, 0.432230, 0.526470],
    [0.404902, 0.436949, 0.529902],
    [0.408333, 0.441667, 0.533333],
    [0.411765, 0.446385, 0.536765],
    [0.415196, 0.451103, 0.540196],
    [0.418627, 0.455821, 0.543627],
    [0.422059, 0.460539, 0.547059],
    [0.425490, 0.465257, 0.550490],
    [0.428922, 0.469975, 0.553921],
    [0.432353, 0.474694, 0.557353],
    [0.435784, 0.479412, 0.560784],
    [0.439216, 0.484130, 0.564216],
    [0.442647, 0.488848, 0.567647],
    [0.446078, 0.493566, 0.571078],
    [0.449510, 0.498284, 0.574510],
    [0.452941, 0.503002, 0.577941],
    [0.456373, 0.507721, 0.581372],
    [0.459804, 0.512439, 0.584804],
    [0.463235, 0.517157, 0.588235],
    [0.466667, 0.521875, 0.591667],
    [0.470098, 0.526593, 0.595098],
    [0.473529, 0.531311, 0.598529],
    [0.476961, 0.536029, 0.601961],
    [0.480392, 0.540748, 0.605392],
    [0.483824, 0.545466, 0.608823],
    [0.487255, 0.550184, 0.612255],
    [0.490686, 0.554902, 0.615686],
    [0.494118, 0.559620, 0.619118],
    [0.497549, 0.564338, 0.622549],
    [0.500980, 0.569056, 0.625980],
    [0.504412, 0.573774, 0.629412],
    [0.507843, 0.578493, 0.632843],
    [0.511275, 0.583211, 0.636274],
    [0.514706, 0.587929, 0.639706],
    [0.518137, 0.592647, 0.643137],
    [0.521569, 0.597365, 0.646569],
    [0.525000, 0.602083, 0.650000],
    [0.528431, 0.606801, 0.653431],
    [0.531863, 0.611520, 0.656863],
    [0.535294, 0.616238, 0.660294],
    [0.538725, 0.620956, 0.663725],
    [0.542157, 0.625674, 0.667157],
    [0.545588, 0.630392, 0.670588],
    [0.549020, 0.635110, 0.674020],
    [0.552451, 0.639828, 0.677451],
    [0.555882, 0.644547, 0.680882],
    [0.559314, 0.649265, 0.684314],
    [0.562745, 0.653983, 0.687745],
    [0.566176, 0.658701, 0.691176],
    [0.569608, 0.663419, 0.694608],
    [0.573039, 0.668137, 0.698039],
    [0.576471, 0.672855, 0.701471],
    [0.579902, 0.677573, 0.704902],
    [0.583333, 0.682292, 0.708333],
    [0.586765, 0.687010, 0.711765],
    [0.590196, 0.691728, 0.715196],
    [0.593627, 0.696446, 0.718627],
    [0.597059, 0.701164, 0.722059],
    [0.600490, 0.705882, 0.725490],
    [0.603922, 0.710600, 0.728922],
    [0.607353, 0.715319, 0.732353],
    [0.610784, 0.720037, 0.735784],
    [0.614216, 0.724755, 0.739216],
    [0.617647, 0.729473, 0.742647],
    [0.621078, 0.734191, 0.746078],
    [0.624510, 0.738909, 0.749510],
    [0.627941, 0.743627, 0.752941],
    [0.631373, 0.748346, 0.756372],
    [0.634804, 0.753064, 0.759804],
    [0.638235, 0.757782, 0.763235],
    [0.641667, 0.762500, 0.766667],
    [0.645098, 0.767218, 0.770098],
    [0.648529, 0.771936, 0.773529],
    [0.651961, 0.776654, 0.776961],
    [0.656863, 0.780392, 0.780392],
    [0.662224, 0.783824, 0.783823],
    [0.667586, 0.787255, 0.787255],
    [0.672947, 0.790686, 0.790686],
    [0.678309, 0.794118, 0.794118],
    [0.683670, 0.797549, 0.797549],
    [0.689032, 0.800980, 0.800980],
    [0.694393, 0.804412, 0.804412],
    [0.699755, 0.807843, 0.807843],
    [0.705116, 0.811275, 0.811274],
    [0.710478, 0.814706, 0.814706],
    [0.715839, 0.818137, 0.818137],
    [0.721201, 0.821569, 0.821569],
    [0.726562, 0.825000, 0.825000],
    [0.731924, 0.828431, 0.828431],
    [0.737285, 0.831863, 0.831863],
    [0.742647, 0.835294, 0.835294],
    [0.748008, 0.838725, 0.838725],
    [0.753370, 0.842157, 0.842157],
    [0.758732, 0.845588, 0.845588],
    [0.764093, 0.849020, 0.849020],
    [0.769455, 0.852451, 0.852451],
    [0.774816, 0.855882, 0.855882],
    [0.780178, 0.859314, 0.859314],
    [0.785539, 0.862745, 0.862745],
    [0.790901, 0.866176, 0.866176],
    [0.796262, 0.869608, 0.869608],
    [0.801624, 0.873039, 0.873039],
    [0.806985, 0.876471, 0.876471],
    [0.812347, 0.879902, 0.879902],
    [0.817708, 0.883333, 0.883333],
    [0.823070, 0.886765, 0.886765],
    [0.828431, 0.890196, 0.890196],
    [0.833793, 0.893627, 0.893627],
    [0.839154, 0.897059, 0.897059],
    [0.844516, 0.900490, 0.900490],
    [0.849877, 0.903922, 0.903922],
    [0.855239, 0.907353, 0.907353],
    [0.860600, 0.910784, 0.910784],
    [0.865962, 0.914216, 0.914216],
    [0.871323, 0.917647, 0.917647],
    [0.876685, 0.921078, 0.921078],
    [0.882047, 0.924510, 0.924510],
    [0.887408, 0.927941, 0.927941],
    [0.892770, 0.931373, 0.931373],
    [0.898131, 0.934804, 0.934804],
    [0.903493, 0.938235, 0.938235],
    [0.908854, 0.941667, 0.941667],
    [0.914216, 0.945098, 0.945098],
    [0.919577, 0.948529, 0.948529],
    [0.924939, 0.951961, 0.951961],
    [0.930300, 0.955392, 0.955392],
    [0.935662, 0.958824, 0.958824],
    [0.941023, 0.962255, 0.962255],
    [0.946385, 0.965686, 0.965686],
    [0.951746, 0.969118, 0.969118],
    [0.957108, 0.972549, 0.972549],
    [0.962469, 0.975980, 0.975980],
    [0.967831, 0.979412, 0.979412],
    [0.973192, 0.982843, 0.982843],
    [0.978554, 0.986275, 0.986275],
    [0.983915, 0.989706, 0.989706],
    [0.989277, 0.993137, 0.993137],
    [0.994638, 0.996569, 0.996569],
    [1.000000, 1.000000, 1.000000],
];

pub(crate) static PINK: [[f64; 3]; 256] = [
    [0.117800, 0.000000, 0.000000],
    [0.137085, 0.025415, 0.025415],
    [0.156369, 0.050829, 0.050829],
    [0.175654, 0.076244, 0.076244],
    [0.194939, 0.101659, 0.101659],
    [0.208752, 0.112895, 0.112895],
    [0.222292, 0.123422, 0.123422],
    [0.235832, 0.133949, 0.133949],
    [0.249372, 0.144476, 0.144476],
    [0.260677, 0.152787, 0.152787],
    [0.271747, 0.160865, 0.160865],
    [0.282817, 0.168943, 0.168943],
    [0.293887, 0.177020, 0.177020],
    [0.303696, 0.184011, 0.184011],
    [0.313296, 0.190821, 0.190821],
    [0.322896, 0.197631, 0.197631],
    [0.332496, 0.204441, 0.204441],
    [0.341282, 0.210595, 0.210595],
    [0.349876, 0.216594, 0.216594],
    [0.358471, 0.222594, 0.222594],
    [0.367066, 0.228594, 0.228594],
    [0.375094, 0.234155, 0.234155],
    [0.382946, 0.239579, 0.239579],
    [0.390797, 0.245003, 0.245003],
    [0.398649, 0.250426, 0.250426],
    [0.406087, 0.255539, 0.255539],
    [0.413360, 0.260527, 0.260527],
    [0.420634, 0.265515, 0.265515],
    [0.427907, 0.270503, 0.270503],
    [0.434869, 0.275261, 0.275261],
    [0.441676, 0.279904, 0.279904],
    [0.448482, 0.284546, 0.284546],
    [0.455289, 0.289189, 0.289189],
    [0.461856, 0.293657, 0.293657],
    [0.468276, 0.298017, 0.298017],
    [0.474696, 0.302378, 0.302378],
    [0.481116, 0.306738, 0.306738],
    [0.487348, 0.310964, 0.310964],
    [0.493440, 0.315088, 0.315088],
    [0.499532, 0.319212, 0.319212],
    [0.505624, 0.323336, 0.323336],
    [0.511569, 0.327355, 0.327355],
    [0.517379, 0.331278, 0.331278],
    [0.523189, 0.335201, 0.335201],
    [0.528999, 0.339123, 0.339123],
    [0.534692, 0.342963, 0.342963],
    [0.540256, 0.346711, 0.346711],
    [0.545820, 0.350459, 0.350459],
    [0.551384, 0.354207, 0.354207],
    [0.556855, 0.357889, 0.357889],
    [0.562201, 0.361484, 0.361484],
    [0.567548, 0.365079, 0.365079],
    [0.572894, 0.368674, 0.368674],
    [0.578167, 0.372217, 0.372217],
    [0.583320, 0.375676, 0.375676],
    [0.588473, 0.379135, 0.379135],
    [0.593626, 0.382594, 0.382594],
    [0.598721, 0.386013, 0.386013],
    [0.603700, 0.389351, 0.389351],
    [0.608678, 0.392688, 0.392688],
    [0.613657, 0.396026, 0.396026],
    [0.618591, 0.399333, 0.399333],
    [0.623412, 0.402561, 0.402561],
    [0.628234, 0.405789, 0.405789],
    [0.633056, 0.409017, 0.409017],
    [0.637843, 0.412221, 0.412221],
    [0.642521, 0.415350, 0.415350],
    [0.647199, 0.418478, 0.418478],
    [0.651877, 0.421607, 0.421607],
    [0.656529, 0.424718, 0.424718],
    [0.661076, 0.427756, 0.427756],
    [0.665623, 0.430794, 0.430794],
    [0.670169, 0.433832, 0.433832],
    [0.674699, 0.436858, 0.436858],
    [0.679124, 0.439813, 0.439813],
    [0.683550, 0.442767, 0.442767],
    [0.687976, 0.445722, 0.445722],
    [0.692391, 0.448669, 0.448669],
    [0.696705, 0.451547, 0.451547],
    [0.701019, 0.454425, 0.454425],
    [0.705333, 0.457303, 0.457303],
    [0.709642, 0.460178, 0.460178],
    [0.713852, 0.462985, 0.462985],
    [0.718063, 0.465792, 0.465792],
    [0.722273, 0.468598, 0.468598],
    [0.726483, 0.471405, 0.471405],
    [0.730597, 0.474146, 0.474146],
    [0.734711, 0.476886, 0.476886],
    [0.738825, 0.479627, 0.479627],
    [0.742938, 0.482368, 0.482368],
    [0.746967, 0.485050, 0.485050],
    [0.750990, 0.487729, 0.487729],
    [0.755014, 0.490408, 0.490408],
    [0.759038, 0.493087, 0.493087],
    [0.760971, 0.498754, 0.495714],
    [0.762685, 0.504734, 0.498336],
    [0.764398, 0.510715, 0.500957],
    [0.766111, 0.516695, 0.503579],
    [0.767812, 0.522447, 0.506154],
    [0.769510, 0.528160, 0.508721],
    [0.771208, 0.533873, 0.511288],
    [0.772906, 0.539586, 0.513855],
    [0.774592, 0.545110, 0.516382],
    [0.776275, 0.550588, 0.518898],
    [0.777958, 0.556067, 0.521415],
    [0.779641, 0.561545, 0.523932],
    [0.781314, 0.566865, 0.526412],
    [0.782982, 0.572136, 0.528880],
    [0.784651, 0.577407, 0.531349],
    [0.786319, 0.582678, 0.533817],
    [0.787978, 0.587816, 0.536253],
    [0.789632, 0.592901, 0.538677],
    [0.791286, 0.597986, 0.541100],
    [0.792941, 0.603071, 0.543523],
    [0.794586, 0.608044, 0.545918],
    [0.796226, 0.612961, 0.548299],
    [0.797867, 0.617879, 0.550679],
    [0.799507, 0.622796, 0.553059],
    [0.801139, 0.627620, 0.555415],
    [0.802767, 0.632385, 0.557754],
    [0.804394, 0.637151, 0.560094],
    [0.806021, 0.641916, 0.562434],
    [0.807640, 0.646603, 0.564751],
    [0.809254, 0.651230, 0.567052],
    [0.810868, 0.655857, 0.569353],
    [0.812482, 0.660484, 0.571655],
    [0.814089, 0.665044, 0.573936],
    [0.815690, 0.669544, 0.576200],
    [0.817290, 0.674043, 0.578464],
    [0.818891, 0.678543, 0.580728],
    [0.820486, 0.682986, 0.582975],
    [0.822075, 0.687369, 0.585204],
    [0.823663, 0.691751, 0.587434],
    [0.825252, 0.696133, 0.589663],
    [0.826835, 0.700469, 0.591878],
    [0.828411, 0.704743, 0.594073],
    [0.829987, 0.709017, 0.596269],
    [0.831563, 0.713291, 0.598465],
    [0.833135, 0.717526, 0.600648],
    [0.834699, 0.721699, 0.602811],
    [0.836263, 0.725872, 0.604975],
    [0.837827, 0.730045, 0.607138],
    [0.839387, 0.734187, 0.609292],
    [0.840940, 0.738266, 0.611424],
    [0.842492, 0.742345, 0.613557],
    [0.844045, 0.746424, 0.615689],
    [0.845594, 0.750478, 0.617814],
    [0.847135, 0.754469, 0.619917],
    [0.848676, 0.758460, 0.622021],
    [0.850218, 0.762452, 0.624124],
    [0.851756, 0.766423, 0.626221],
    [0.853286, 0.770332, 0.628296],
    [0.854816, 0.774240, 0.630371],
    [0.856345, 0.778149, 0.632446],
    [0.857873, 0.782042, 0.634516],
    [0.859392, 0.785873, 0.636564],
    [0.860910, 0.789704, 0.638612],
    [0.862429, 0.793535, 0.640660],
    [0.863946, 0.797355, 0.642705],
    [0.865454, 0.801113, 0.644727],
    [0.866962, 0.804871, 0.646749],
    [0.868470, 0.808629, 0.648770],
    [0.869977, 0.812380, 0.650790],
    [0.871475, 0.816069, 0.652787],
    [0.872973, 0.819758, 0.654783],
    [0.874471, 0.823446, 0.656780],
    [0.875968, 0.827132, 0.658776],
    [0.877455, 0.830755, 0.660749],
    [0.878942, 0.834378, 0.662721],
    [0.880430, 0.838002, 0.664694],
    [0.881917, 0.841625, 0.666667],
    [0.883394, 0.845186, 0.668616],
    [0.884871, 0.848747, 0.670565],
    [0.886348, 0.852309, 0.672514],
    [0.887826, 0.855870, 0.674463],
    [0.889293, 0.859375, 0.676391],
    [0.890761, 0.862878, 0.678318],
    [0.892228, 0.866380, 0.680245],
    [0.893695, 0.869882, 0.682171],
    [0.895154, 0.873334, 0.684078],
    [0.896611, 0.876780, 0.685984],
    [0.898069, 0.880225, 0.687889],
    [0.899527, 0.883671, 0.689794],
    [0.900976, 0.887072, 0.691681],
    [0.902425, 0.890464, 0.693564],
    [0.903873, 0.893857, 0.695448],
    [0.905321, 0.897250, 0.697332],
    [0.906762, 0.900601, 0.699199],
    [0.908201, 0.903942, 0.701063],
    [0.909639, 0.907284, 0.702927],
    [0.911078, 0.910625, 0.704790],
    [0.912510, 0.912510, 0.709362],
    [0.913940, 0.913940, 0.714781],
    [0.915370, 0.915370, 0.720199],
    [0.916799, 0.916799, 0.725618],
    [0.918223, 0.918223, 0.730923],
    [0.919643, 0.919643, 0.736182],
    [0.921064, 0.921064, 0.741442],
    [0.922484, 0.922484, 0.746701],
    [0.923899, 0.923899, 0.751864],
    [0.925311, 0.925311, 0.756979],
    [0.926723, 0.926723, 0.762093],
    [0.928135, 0.928135, 0.767207],
    [0.929542, 0.929542, 0.772239],
    [0.930945, 0.930945, 0.777219],
    [0.932348, 0.932348, 0.782199],
    [0.933752, 0.933752, 0.787179],
    [0.935150, 0.935150, 0.792089],
    [0.936545, 0.936545, 0.796945],
    [0.937940, 0.937940, 0.801800],
    [0.939335, 0.939335, 0.806656],
    [0.940725, 0.940725, 0.811452],
    [0.942112, 0.942112, 0.816193],
    [0.943498, 0.943498, 0.820934],
    [0.944885, 0.944885, 0.825675],
    [0.946267, 0.946267, 0.830365],
    [0.947646, 0.947646, 0.834999],
    [0.949024, 0.949024, 0.839632],
    [0.950402, 0.950402, 0.844265],
    [0.951777, 0.951777, 0.848856],
    [0.953147, 0.953147, 0.853389],
    [0.954518, 0.954518, 0.857922],
    [0.955888, 0.955888, 0.862455],
    [0.957255, 0.957255, 0.866952],
    [0.958617, 0.958617, 0.871391],
    [0.959979, 0.959979, 0.875830],
    [0.961342, 0.961342, 0.880269],
    [0.962702, 0.962702, 0.884679],
    [0.964056, 0.964056, 0.889029],
    [0.965411, 0.965411, 0.893379],
    [0.966765, 0.966765, 0.897730],
    [0.968118, 0.968118, 0.902056],
    [0.969465, 0.969465, 0.906323],
    [0.970812, 0.970812, 0.910591],
    [0.972159, 0.972159, 0.914858],
    [0.973504, 0.973504, 0.919106],
    [0.974843, 0.974843, 0.923294],
    [0.976183, 0.976183, 0.927482],
    [0.977523, 0.977523, 0.931671],
    [0.978861, 0.978861, 0.935844],
    [0.980193, 0.980193, 0.939958],
    [0.981525, 0.981525, 0.944072],
    [0.982857, 0.982857, 0.948185],
    [0.984188, 0.984188, 0.952289],
    [0.985513, 0.985513, 0.956331],
    [0.986838, 0.986838, 0.960374],
    [0.988162, 0.988162, 0.964417],
    [0.989486, 0.989486, 0.968454],
    [0.990804, 0.990804, 0.972429],
    [0.992122, 0.992122, 0.976405],
    [0.993440, 0.993440, 0.980381],
    [0.994757, 0.994757, 0.984353],
    [0.996068, 0.996068, 0.988265],
    [0.997379, 0.997379, 0.992177],
    [0.998689, 0.998689, 0.996088],
    [1.000000, 1.000000, 1.000000],
];

pub(crate) static COOL: [[f64; 3]; 256] = [
    [0.000000, 1.000000, 1.000000],
    [0.003922, 0.996078, 1.000000],
    [0.007843, 0.992157, 1.000000],
    [0.011765, 0.988235, 1.000000],
    [0.015686, 0.984314, 1.000000],
    [0.019608, 0.980392, 1.000000],
    [0.023529, 0.976471, 1.000000],
    [0.027451, 0.972549, 1.000000],
    [0.031373, 0.968627, 1.000000],
    [0.035294, 0.964706, 1.000000],
    [0.039216, 0.960784, 1.000000],
    [0.043137, 0.956863, 1.000000],
    [0.047059, 0.952941, 1.000000],
    [0.050980, 0.949020, 1.000000],
    [0.054902, 0.945098, 1.000000],
    [0.058824, 0.941176, 1.000000],
    [0.062745, 0.937255, 1.000000],
    [0.066667, 0.933333, 1.000000],
    [0.070588, 0.929412, 1.000000],
    [0.074510, 0.925490, 1.000000],
    [0.078431, 0.921569, 1.000000],
    [0.082353, 0.917647, 1.000000],
    [0.086275, 0.913725, 1.000000],
    [0.090196, 0.909804, 1.000000],
    [0.094118, 0.905882, 1.000000],
    [0.098039, 0.901961, 1.000000],
    [0.101961, 0.898039, 1.000000],
    [0.105882, 0.894118, 1.000000],
    [0.109804, 0.890196, 1.000000],
    [0.113725, 0.886275, 1.000000],
    [0.117647, 0.882353, 1.000000],
    [0.121569, 0.878431, 1.000000],
    [0.125490, 0.874510, 1.000000],
    [0.129412, 0.870588, 1.000000],
    [0.133333, 0.866667, 1.000000],
    [0.137255, 0.862745, 1.000000],
    [0.141176, 0.858824, 1.000000],
    [0.145098, 0.854902, 1.000000],
    [0.149020, 0.850980, 1.000000],
    [0.152941, 0.847059, 1.000000],
    [0.156863, 0.843137, 1.000000],
    [0.160784, 0.839216, 1.000000],
    [0.164706, 0.835294, 1.000000],
    [0.168627, 0.831373, 1.000000],
    [0.172549, 0.827451, 1.000000],
    [0.176471, 0.823529, 1.000000],
    [0.180392, 0.819608, 1.000000],
    [0.184314, 0.815686, 1.000000],
    [0.188235, 0.811765, 1.000000],
    [0.192157, 0.807843, 1.000000],
    [0.196078, 0.803922, 1.000000],
    [0.200000, 0.800000, 1.000000],
    [0.203922, 0.796078, 1.000000],
    [0.207843, 0.792157, 1.000000],
    [0.211765, 0.788235, 1.000000],
    [0.215686, 0.784314, 1.000000],
    [0.219608, 0.780392, 1.000000],
    [0.223529, 0.776471, 1.000000],
    [0.227451, 0.772549, 1.000000],
    [0.231373, 0.768627, 1.000000],
    [0.235294, 0.764706, 1.000000],
    [0.239216, 0.760784, 1.000000],
    [0.243137, 0.756863, 1.000000],
    [0.247059, 0.752941, 1.000000],
    [0.250980, 0.749020, 1.000000],
    [0.254902, 0.745098, 1.000000],
    [0.258824, 0.741176, 1.000000],
    [0.262745, 0.737255, 1.000000],
    [0.266667, 0.733333, 1.000000],
    [0.270588, 0.729412, 1.000000],
    [0.274510, 0.725490, 1.000000],
    [0.278431, 0.721569, 1.000000],
    [0.282353, 0.717647, 1.000000],
    [0.286275, 0.713725, 1.000000],
    [0.290196, 0.709804, 1.000000],
    [0.294118, 0.705882, 1.000000],
    [0.298039, 0.701961, 1.000000],
    [0.301961, 0.698039, 1.000000],
    [0.305882, 0.694118, 1.000000],
    [0.309804, 0.690196, 1.000000],
    [0.313725, 0.686275, 1.000000],
    [0.317647, 0.682353, 1.000000],
    [0.321569, 0.678431, 1.000000],
    [0.325490, 0.674510, 1.000000],
    [0.329412, 0.670588, 1.000000],
    [0.333333, 0.666667, 1.000000],
    [0.337255, 0.662745, 1.000000],
    [0.341176, 0.658824, 1.000000],
    [0.345098, 0.654902, 1.000000],
    [0.349020, 0.650980, 1.000000],
    [0.352941, 0.647059, 1.000000],
    [0.356863, 0.643137, 1.000000],
    [0.360784, 0.639216, 1.000000],
    [0.364706, 0.635294, 1.000000],
    [0.368627, 0.631373, 1.000000],
    [0.372549, 0.627451, 1.000000],
    [0.376471, 0.623529, 1.000000],
    [0.380392, 0.619608, 1.000000],
    [0.384314, 0.615686, 1.000000],
    [0.388235, 0.611765, 1.000000],
    [0.392157, 0.607843, 1.000000],
    [0.396078, 0.603922, 1.000000],
    [0.400000, 0.600000, 1.000000],
    [0.403922, 0.596078, 1.000000],
    [0.407843, 0.592157, 1.000000],
    [0.411765, 0.588235, 1.000000],
    [0.415686, 0.584314, 1.000000],
    [0.419608, 0.580392, 1.000000],
    [0.423529, 0.576471, 1.000000],
    [0.427451, 0.572549, 1.000000],
    [0.431373, 0.568627, 1.000000],
    [0.435294, 0.564706, 1.000000],
    [0.439216, 0.560784, 1.000000],
    [0.443137, 0.556863, 1.000000],
    [0.447059, 0.552941, 1.000000],
    [0.450980, 0.549020, 1.000000],
    [0.454902, 0.545098, 1.000000],
    [0.458824, 0.541176, 1.000000],
    [0.462745, 0.537255, 1.000000],
    [0.466667, 0.533333, 1.000000],
    [0.470588, 0.529412, 1.000000],
    [0.474510, 0.525490, 1.000000],
    [0.478431, 0.521569, 1.000000],
    [0.482353, 0.517647, 1.000000],
    [0.486275, 0.513725, 1.000000],
    [0.490196, 0.509804, 1.000000],
    [0.494118, 0.505882, 1.000000],
    [0.498039, 0.501961, 1.000000],
    [0.501961, 0.498039, 1.000000],
    [0.505882, 0.494118, 1.000000],
    [0.509804, 0.490196, 1.000000],
    [0.513725, 0.486275, 1.000000],
    [0.517647, 0.482353, 1.000000],
    [0.521569, 0.478431, 1.000000],
    [0.525490, 0.474510, 1.000000],
    [0.529412, 0.470588, 1.000000],
    [0.533333, 0.466667, 1.000000],
    [0.537255, 0.462745, 1.000000],
    [0.541176, 0.458824, 1.000000],
    [0.545098, 0.454902, 1.000000],
    [0.549020, 0.450980, 1.000000],
    [0.552941, 0.447059, 1.000000],
    [0.556863, 0.443137, 1.000000],
    [0.560784, 0.439216, 1.000000],
    [0.564706, 0.435294, 1.000000],
    [0.568627, 0.431373, 1.000000],
    [0.572549, 0.427451, 1.000000],
    [0.576471, 0.423529, 1.000000],
    [0.580392, 0.419608, 1.000000],
    [0.584314, 0.415686, 1.000000],
    [0.588235, 0.411765, 1.000000],
    [0.592157, 0.407843, 1.000000],
    [0.596078, 0.403922, 1.000000],
    [0.600000, 0.400000, 1.000000],
    [0.603922, 0.396078, 1.000000],
    [0.607843, 0.392157, 1.000000],
    [0.611765, 0.388235, 1.000000],
    [0.615686, 0.384314, 1.000000],
    [0.619608, 0.380392, 1.000000],
    [0.623529, 0.376471, 1.000000],
    [0.627451, 0.372549, 1.000000],
    [0.631373, 0.368627, 1.000000],
    [0.635294, 0.364706, 1.000000],
    [0.639216, 0.360784, 1.000000],
    [0.643137, 0.356863, 1.000000],
    [0.647059, 0.352941, 1.000000],
    [0.650980, 0.349020, 1.000000],
    [0.654902, 0.345098, 1.000000],
    [0.658824, 0.341176, 1.000000],
    [0.662745, 0.337255, 1.000000],
    [0.666667, 0.333333, 1.000000],
    [0.670588, 0.329412, 1.000000],
    [0.674510, 0.325490, 1.000000],
    [0.678431, 0.321569, 1.000000],
    [0.682353, 0.317647, 1.000000],
    [0.686275, 0.313725, 1.000000],
    [0.690196, 0.309804, 1.000000],
    [0.694118, 0.305882, 1.000000],
    [0.698039, 0.301961, 1.000000],
    [0.701961, 0.298039, 1.000000],
    [0.705882, 0.294118, 1.000000],
    [0.709804, 0.290196, 1.000000],
    [0.713725, 0.286275, 1.000000],
    [0.717647, 0.282353, 1.000000],
    [0.721569, 0.278431, 1.000000],
    [0.725490, 0.274510, 1.000000],
    [0.729412, 0.270588, 1.000000],
    [0.733333, 0.266667, 1.000000],
    [0.737255, 0.262745, 1.000000],
    [0.741176, 0.258824, 1.000000],
    [0.745098, 0.254902, 1.000000],
    [0.749020, 0.250980, 1.000000],
    [0.752941, 0.247059, 1.000000],
    [0.756863, 0.243137, 1.000000],
    [0.760784, 0.239216, 1.000000],
    [0.764706, 0.235294, 1.000000],
    [0.768627, 0.231373, 1.000000],
    [0.772549, 0.227451, 1.000000],
    [0.776471, 0.223529, 1.000000],
    [0.780392, 0.219608, 1.000000],
    [0.784314, 0.215686, 1.000000],
    [0.788235, 0.211765, 1.000000],
    [0.792157, 0.207843, 1.000000],
    [0.796078, 0.203922, 1.000000],
    [0.800000, 0.200000, 1.000000],
    [0.803922, 0.196078, 1.000000],
    [0.807843, 0.192157, 1.000000],
    [0.811765, 0.188235, 1.000000],
    [0.815686, 0.184314, 1.000000],
    [0.819608, 0.180392, 1.000000],
    [0.823529, 0.176471, 1.000000],
    [0.827451, 0.172549, 1.000000],
    [0.831373, 0.168627, 1.000000],
    [0.835294, 0.164706, 1.000000],
    [0.839216, 0.160784, 1.000000],
    [0.843137, 0.156863, 1.000000],
    [0.847059, 0.152941, 1.000000],
    [0.850980, 0.149020, 1.000000],
    [0.854902, 0.145098, 1.000000],
    [0.858824, 0.141176, 1.000000],
    [0.862745, 0.137255, 1.000000],
    [0.866667, 0.133333, 1.000000],
    [0.870588, 0.129412, 1.000000],
    [0.874510, 0.125490, 1.000000],
    [0.878431, 0.121569, 1.000000],
    [0.882353, 0.117647, 1.000000],
    [0.886275, 0.113725, 1.000000],
    [0.890196, 0.109804, 1.000000],
    [0.894118, 0.105882, 1.000000],
    [0.898039, 0.101961, 1.000000],
    [0.901961, 0.098039, 1.000000],
    [0.905882, 0.094118, 1.000000],
    [0.909804, 0.090196, 1.000000],
    [0.913725, 0.086275, 1.000000],
    [0.917647, 0.082353, 1.000000],
    [0.921569, 0.078431, 1.000000],
    [0.925490, 0.074510, 1.000000],
    [0.929412, 0.070588, 1.000000],
    [0.933333, 0.066667, 1.000000],
    [0.937255, 0.062745, 1.000000],
    [0.941176, 0.058824, 1.000000],
    [0.945098, 0.054902, 1.000000],
    [0.949020, 0.050980, 1.000000],
    [0.952941, 0.047059, 1.000000],
    [0.956863, 0.043137, 1.000000],
    [0.960784, 0.039216, 1.000000],
    [0.964706, 0.035294, 1.000000],
    [0.968627, 0.031373, 1.000000],
    [0.972549, 0.027451, 1.000000],
    [0.976471, 0.023529, 1.000000],
    [0.980392, 0.019608, 1.000000],
    [0.984314, 0.015686, 1.000000],
    [0.988235, 0.011765, 1.000000],
    [0.992157, 0.007843, 1.000000],
    [0.996078, 0.003922, 1.000000],
    [1.000000, 0.000000, 1.000000],
];

pub(crate) static AUTUMN: [[f64; 3]; 256] = [
    [1.000000, 0.000000, 0.000000],
    [1.000000, 0.003922, 0.000000],
    [1.000000, 0.007843, 0.000000],
    [1.000000, 0.011765, 0.000000],
    [1.000000, 0.015686, 0.000000],
    [1.000000, 0.019608, 0.000000],
    [1.000000, 0.023529, 0.000000],
    [1.000000, 0.027451, 0.000000],
    [1.000000, 0.031373, 0.000000],
    [1.000000, 0.035294, 0.000000],
    [1.000000, 0.039216, 0.000000],
    [1.000000, 0.043137, 0.000000],
    [1.000000, 0.047059, 0.000000],
    [1.000000, 0.050980, 0.000000],
    [1.000000, 0.054902, 0.000000],
    [1.000000, 0.058824, 0.000000],
    [1.000000, 0.062745, 0.000000],
    [1.000000, 0.066667, 0.000000],
    [1.000000, 0.070588, 0.000000],
    [1.000000, 0.074510, 0.000000],
    [1.000000, 0.078431, 0.000000],
    [1.000000, 0.082353, 0.000000],
    [1.000000, 0.086275, 0.000000],
    [1.000000, 0.090196, 0.000000],
    [1.000000, 0.094118, 0.000000],
    [1.000000, 0.098039, 0.000000],
    [1.000000, 0.101961, 0.000000],
    [1.000000, 0.105882, 0.000000],
    [1.000000, 0.109804, 0.000000],
    [1.000000, 0.113725, 0.000000],
    [1.000000, 0.117647, 0.000000],
    [1.000000, 0.121569, 0.000000],
    [1.000000, 0.125490, 0.000000],
    [1.000000, 0.129412, 0.000000],
    [1.000000, 0.133333, 0.000000],
    [1.000000, 0.137255, 0.000000],
    [1.000000, 0.141176, 0.000000],
    [1.000000, 0.145098, 0.000000],
    [1.000000, 0.149020, 0.000000],
    [1.000000, 0.152941, 0.000000],
    [1.000000, 0.156863, 0.000000],
    [1.000000, 0.160784, 0.000000],
    [1.000000, 0.164706, 0.000000],
    [1.000000, 0.168627, 0.000000],
    [1.000000, 0.172549, 0.000000],
    [1.000000, 0.176471, 0.000000],
    [1.000000, 0.180392, 0.000000],
    [1.000000, 0.184314, 0.000000],
    [1.000000, 0.188235, 0.000000],
    [1.000000, 0.192157, 0.000000],
    [1.000000, 0.196078, 0.000000],
    [1.000000, 0.200000, 0.000000],
    [1.000000, 0.203922, 0.000000],
    [1.000000, 0.207843, 0.000000],
    [1.000000, 0.211765, 0.000000],
    [1.000000, 0.215686, 0.000000],
    [1.000000, 0.219608, 0.000000],
    [1.000000, 0.223529, 0.000000],
    [1.000000, 0.227451, 0.000000],
    [1.000000, 0.231373, 0.000000],
    [1.000000, 0.235294, 0.000000],
    [1.000000, 0.239216, 0.000000],
    [1.000000, 0.243137, 0.000000],
    [1.000000, 0.247059, 0.000000],
    [1.000000, 0.250980, 0.000000],
    [1.000000, 0.254902, 0.000000],
    [1.000000, 0.258824, 0.000000],
    [1.000000, 0.262745, 0.000000],
    [1.000000, 0.266667, 0.000000],
    [1.000000, 0.270588, 0.000000],
    [1.000000, 0.274510, 0.000000],
    [1.000000, 0.278431, 0.000000],
    [1.000000, 0.282353, 0.000000],
    [1.000000, 0.286275, 0.000000],
    [1.000000, 0.290196, 0.000000],
    [1.000000, 0.294118, 0.000000],
    [1.000000, 0.298039, 0.000000],
    [1.000000, 0.301961, 0.000000],
    [1.000000, 0.305882, 0.000000],
    [1.000000, 0.309804, 0.000000],
    [1.000000, 0.313725, 0.000000],
    [1.000000, 0.317647, 0.000000],
    [1.000000, 0.321569, 0.000000],
    [1.000000, 0.325490, 0.000000],
    [1.000000, 0.329412, 0.000000],
    [1.000000, 0.333333, 0.000000],
    [1.000000, 0.337255, 0.000000],
    [1.000000, 0.341176, 0.000000],
    [1.000000, 0.345098, 0.000000],
    [1.000000, 0.349020, 0.000000],
    [1.000000, 0.352941, 0.000000],
    [1.000000, 0.356863, 0.000000],
    [1.000000, 0.360784, 0.000000],
    [1.000000, 0.364706, 0.000000],
    [1.000000, 0.368627, 0.000000],
    [1.000000, 0.372549, 0.000000],
    [1.000000, 0.376471, 0.000000],
    [1.000000, 0.380392, 0.000000],
    [1.000000, 0.384314, 0.000000],
    [1.000000, 0.388235, 0.000000],
    [1.000000, 0.392157, 0.000000],
    [1.000000, 0.396078, 0.000000],
    [1.000000, 0.400000, 0.000000],
    [1.000000, 0.403922, 0.000000],
    [1.000000, 0.407843, 0.000000],
    [1.000000, 0.411765, 0.000000],
    [1.000000, 0.415686, 0.000000],
    [1.000000, 0.419608, 0.000000],
    [1.000000, 0.423529, 0.000000],
    [1.000000, 0.427451, 0.000000],
    [1.000000, 0.431373, 0.000000],
    [1.000000, 0.435294, 0.000000],
    [1.000000, 0.439216, 0.000000],
    [1.000000, 0.443137, 0.000000],
    [1.000000, 0.447059, 0.000000],
    [1.000000, 0.450980, 0.000000],
    [1.000000, 0.454902, 0.000000],
    [1.000000, 0.458824, 0.000000],
    [1.000000, 0.462745, 0.000000],
    [1.000000, 0.466667, 0.000000],
    [1.000000, 0.470588, 0.000000],
    [1.000000, 0.474510, 0.000000],
    [1.000000, 0.478431, 0.000000],
    [1.000000, 0.482353, 0.000000],
    [1.000000, 0.486275, 0.000000],
    [1.000000, 0.490196, 0.000000],
    [1.000000, 0.494118, 0.000000],
    [1.000000, 0.498039, 0.000000],
    [1.000000, 0.501961, 0.000000],
    [1.000000, 0.505882, 0.000000],
    [1.000000, 0.509804, 0.000000],
    [1.000000, 0.513725, 0.000000],
    [1.000000, 0.517647, 0.000000],
    [1.000000, 0.521569, 0.000000],
    [1.000000, 0.525490, 0.000000],
    [1.000000, 0.529412, 0.000000],
    [1.000000, 0.533333, 0.000000],
    [1.000000, 0.537255, 0.000000],
    [1.000000, 0.541176, 0.000000],
    [1.000000, 0.545098, 0.000000],
    [1.000000, 0.549020, 0.000000],
    [1.000000, 0.552941, 0.000000],
    [1.000000, 0.556863, 0.000000],
    [1.000000, 0.560784, 0.000000],
    [1.000000, 0.564706, 0.000000],
    [1.000000, 0.568627, 0.000000],
    [1.000000, 0.572549, 0.000000],
    [1.000000, 0.576471, 0.000000],
    [1.000000, 0.580392, 0.000000],
    [1.000000, 0.584314, 0.000000],
    [1.000000, 0.588235, 0.000000],
    [1.000000, 0.592157, 0.000000],
    [1.000000, 0.596078, 0.000000],
    [1.000000, 0.600000, 0.000000],
    [1.000000, 0.603922, 0.000000],
    [1.000000, 0.607843, 0.000000],
    [1.000000, 0.611765, 0.000000],
    [1.000000, 0.615686, 0.000000],
    [1.000000, 0.619608, 0.000000],
    [1.000000, 0.623529, 0.000000],
    [1.000000, 0.627451, 0.000000],
    [1.000000, 0.631373, 0.000000],
    [1.000000, 0.635294, 0.000000],
    [1.000000, 0.639216, 0.000000],
    [1.000000, 0.643137, 0.000000],
    [1.000000, 0.647059, 0.000000],
    [1.000000, 0.650980, 0.000000],
    [1.000000, 0.654902, 0.000000],
    [1.000000, 0.658824, 0.000000],
    [1.000000, 0.662745, 0.000000],
    [1.000000, 0.666667, 0.000000],
    [1.000000, 0.670588, 0.000000],
    [1.000000, 0.674510, 0.000000],
    [1.000000, 0.678431, 0.000000],
    [1.000000, 0.682353, 0.000000],
    [1.000000, 0.686275, 0.000000],
    [1.000000, 0.690196, 0.000000],
    [1.000000, 0.694118, 0.000000],
    [1.000000, 0.698039, 0.000000],
    [1.000000, 0.701961, 0.000000],
    [1.000000, 0.705882, 0.000000],
    [1.000000, 0.709804, 0.000000],
    [1.000000, 0.713725, 0.000000],
    [1.000000, 0.717647, 0.000000],
    [1.000000, 0.721569, 0.000000],
    [1.000000, 0.725490, 0.000000],
    [1.000000, 0.729412, 0.000000],
    [1.000000, 0.733333, 0.000000],
    [1.000000, 0.737255, 0.000000],
    [1.000000, 0.741176, 0.000000],
    [1.000000, 0.745098, 0.000000],
    [1.000000, 0.749020, 0.000000],
    [1.000000, 0.752941, 0.000000],
    [1.000000, 0.756863, 0.000000],
    [1.000000, 0.760784, 0.000000],
    [1.000000, 0.764706, 0.000000],
    [1.000000, 0.768627, 0.000000],
    [1.000000, 0.772549, 0.000000],
    [1.000000, 0.776471, 0.000000],
    [1.000000, 0.780392, 0.000000],
    [1.000000, 0.784314, 0.000000],
    [1.000000, 0.788235, 0.000000],
    [1.000000, 0.792157, 0.000000],
    [1.000000, 0.796078, 0.000000],
    [1.000000, 0.800000, 0.000000],
    [1.000000, 0.803922, 0.000000],
    [1.000000, 0.807843, 0.000000],
    [1.000000, 0.811765, 0.000000],
    [1.000000, 0.815686, 0.000000],
    [1.000000, 0.819608, 0.000000],
    [1.000000, 0.823529, 0.000000],
    [1.000000, 0.827451, 0.000000],
    [1.000000, 0.831373, 0.000000],
    [1.000000, 0.835294, 0.000000],
    [1.000000, 0.839216, 0.000000],
    [1.000000, 0.843137, 0.000000],
    [1.000000, 0.847059, 0.000000],
    [1.000000, 0.850980, 0.000000],
    [1.000000, 0.854902, 0.000000],
    [1.000000, 0.858824, 0.000000],
    [1.000000, 0.862745, 0.000000],
    [1.000000, 0.866667, 0.000000],
    [1.000000, 0.870588, 0.000000],
    [1.000000, 0.874510, 0.000000],
    [1.000000, 0.878431, 0.000000],
    [1.000000, 0.882353, 0.000000],
    [1.000000, 0.886275, 0.000000],
    [1.000000, 0.890196, 0.000000],
    [1.000000, 0.894118, 0.000000],
    [1.000000, 0.898039, 0.000000],
    [1.000000, 0.901961, 0.000000],
    [1.000000, 0.905882, 0.000000],
    [1.000000, 0.909804, 0.000000],
    [1.000000, 0.913725, 0.000000],
    [1.000000, 0.917647, 0.000000],
    [1.000000, 0.921569, 0.000000],
    [1.000000, 0.925490, 0.000000],
    [1.000000, 0.929412, 0.000000],
    [1.000000, 0.933333, 0.000000],
    [1.000000, 0.937255, 0.000000],
    [1.000000, 0.941176, 0.000000],
    [1.000000, 0.945098, 0.000000],
    [1.000000, 0.949020, 0.000000],
    [1.000000, 0.952941, 0.000000],
    [1.000000, 0.956863, 0.000000],
    [1.000000, 0.960784, 0.000000],
    [1.000000, 0.964706, 0.000000],
    [1.000000, 0.968627, 0.000000],
    [1.000000, 0.972549, 0.000000],
    [1.000000, 0.976471, 0.000000],
    [1.000000, 0.980392, 0.000000],
    [1.000000, 0.984314, 0.000000],
    [1.000000, 0.988235, 0.000000],
    [1.000000, 0.992157, 0.000000],
    [1.000000, 0.996078, 0.000000],
    [1.000000, 1.000000, 0.000000],
];

pub(crate) static WINTER: [[f64; 3]; 256] = [
    [0.000000, 0.000000, 1.000000],
    [0.000000, 0.003922, 0.998039],
    [0.000000, 0.007843, 0.996078],
    [0.000000, 0.011765, 0.994118],
    [0.000000, 0.015686, 0.992157],
    [0.000000, 0.019608, 0.990196],
    [0.000000, 0.023529, 0.988235],
    [0.000000, 0.027451, 0.986275],
    [0.000000, 0.031373, 0.984314],
    [0.000000, 0.035294, 0.982353],
    [0.000000, 0.039216, 0.980392],
    [0.000000, 0.043137, 0.978431],
    [0.000000, 0.047059, 0.976471],
    [0.000000, 0.050980, 0.974510],
    [0.000000, 0.054902, 0.972549],
    [0.000000, 0.058824, 0.970588],
    [0.000000, 0.062745, 0.968627],
    [0.000000, 0.066667, 0.966667],
    [0.000000, 0.070588, 0.964706],
    [0.000000, 0.074510, 0.962745],
    [0.000000, 0.078431, 0.960784],
    [0.000000, 0.082353, 0.958824],
    [0.000000, 0.086275, 0.956863],
    [0.000000, 0.090196, 0.954902],
    [0.000000, 0.094118, 0.952941],
    [0.000000, 0.098039, 0.950980],
    [0.000000, 0.101961, 0.949020],
    [0.000000, 0.105882, 0.947059],
    [0.000000, 0.109804, 0.945098],
    [0.000000, 0.113725, 0.943137],
    [0.000000, 0.117647, 0.941176],
    [0.000000, 0.121569, 0.939216],
    [0.000000, 0.125490, 0.937255],
    [0.000000, 0.129412, 0.935294],
    [0.000000, 0.133333, 0.933333],
    [0.000000, 0.137255, 0.931373],
    [0.000000, 0.141176, 0.929412],
    [0.000000, 0.145098, 0.927451],
    [0.000000, 0.149020, 0.925490],
    [0.000000, 0.152941, 0.923529],
    [0.000000, 0.156863, 0.921569],
    [0.000000, 0.160784, 0.919608],
    [0.000000, 0.164706, 0.917647],
    [0.000000, 0.168627, 0.915686],
    [0.000000, 0.172549, 0.913725],
    [0.000000, 0.176471, 0.911765],
    [0.000000, 0.180392, 0.909804],
    [0.000000, 0.184314, 0.907843],
    [0.000000, 0.188235, 0.905882],
    [0.000000, 0.192157, 0.903922],
    [0.000000, 0.196078, 0.901961],
    [0.000000, 0.200000, 0.900000],
    [0.000000, 0.203922, 0.898039],
    [0.000000, 0.207843, 0.896078],
    [0.000000, 0.211765, 0.894118],
    [0.000000, 0.215686, 0.892157],
    [0.000000, 0.219608, 0.890196],
    [0.000000, 0.223529, 0.888235],
    [0.000000, 0.227451, 0.886275],
    [0.000000, 0.231373, 0.884314],
    [0.000000, 0.235294, 0.882353],
    [0.000000, 0.239216, 0.880392],
    [0.000000, 0.243137, 0.878431],
    [0.000000, 0.247059, 0.876471],
    [0.000000, 0.250980, 0.874510],
    [0.000000, 0.254902, 0.872549],
    [0.000000, 0.258824, 0.870588],
    [0.000000, 0.262745, 0.868627],
    [0.000000, 0.266667, 0.866667],
    [0.000000, 0.270588, 0.864706],
    [0.000000, 0.274510, 0.862745],
    [0.000000, 0.278431, 0.860784],
    [0.000000, 0.282353, 0.858824],
    [0.000000, 0.286275, 0.856863],
    [0.000000, 0.290196, 0.854902],
    [0.000000, 0.294118, 0.852941],
    [0.000000, 0.298039, 0.850980],
    [0.000000, 0.301961, 0.849020],
    [0.000000, 0.305882, 0.847059],
    [0.000000, 0.309804, 0.845098],
    [0.000000, 0.313725, 0.843137],
    [0.000000, 0.317647, 0.841176],
    [0.000000, 0.321569, 0.839216],
    [0.000000, 0.325490, 0.837255],
    [0.000000, 0.329412, 0.835294],
    [0.000000, 0.333333, 0.833333],
    [0.000000, 0.337255, 0.831373],
    [0.000000, 0.341176, 0.829412],
    [0.000000, 0.345098, 0.827451],
    [0.000000, 0.349020, 0.825490],
    [0.000000, 0.352941, 0.823529],
    [0.000000, 0.356863, 0.821569],
    [0.000000, 0.360784, 0.819608],
    [0.000000, 0.364706, 0.817647],
    [0.000000, 0.368627, 0.815686],
    [0.000000, 0.372549, 0.813725],
    [0.000000, 0.376471, 0.811765],
    [0.000000, 0.380392, 0.809804],
    [0.000000, 0.384314, 0.807843],
    [0.000000, 0.388235, 0.805882],
    [0.000000, 0.392157, 0.803922],
    [0.000000, 0.396078, 0.801961],
    [0.000000, 0.400000, 0.800000],
    [0.000000, 0.403922, 0.798039],
    [0.000000, 0.407843, 0.796078],
    [0.000000, 0.411765, 0.794118],
    [0.000000, 0.415686, 0.792157],
    [0.000000, 0.419608, 0.790196],
    [0.000000, 0.423529, 0.788235],
    [0.000000, 0.427451, 0.786275],
    [0.000000, 0.431373, 0.784314],
    [0.000000, 0.435294, 0.782353],
    [0.000000, 0.439216, 0.780392],
    [0.000000, 0.443137, 0.778431],
    [0.000000, 0.447059, 0.776471],
    [0.000000, 0.450980, 0.774510],
    [0.000000, 0.454902, 0.772549],
    [0.000000, 0.458824, 0.770588],
    [0.000000, 0.462745, 0.768627],
    [0.000000, 0.466667, 0.766667],
    [0.000000, 0.470588, 0.764706],
    [0.000000, 0.474510, 0.762745],
    [0.000000, 0.478431, 0.760784],
    [0.000000, 0.482353, 0.758824],
    [0.000000, 0.486275, 0.756863],
    [0.000000, 0.490196, 0.754902],
    [0.000000, 0.494118, 0.752941],
    [0.000000, 0.498039, 0.750980],
    [0.000000, 0.501961, 0.749020],
    [0.000000, 0.505882, 0.747059],
    [0.000000, 0.509804, 0.745098],
    [0.000000, 0.513725, 0.743137],
    [0.000000, 0.517647, 0.741176],
    [0.000000, 0.521569, 0.739216],
    [0.000000, 0.525490, 0.737255],
    [0.000000, 0.529412, 0.735294],
    [0.000000, 0.533333, 0.733333],
    [0.000000, 0.537255, 0.731373],
    [0.000000, 0.541176, 0.729412],
    [0.000000, 0.545098, 0.727451],
    [0.000000, 0.549020, 0.725490],
    [0.000000, 0.552941, 0.723529],
    [0.000000, 0.556863, 0.721569],
    [0.000000, 0.560784, 0.719608],
    [0.000000, 0.564706, 0.717647],
    [0.000000, 0.568627, 0.715686],
    [0.000000, 0.572549, 0.713725],
    [0.000000, 0.576471, 0.711765],
    [0.000000, 0.580392, 0.709804],
    [0.000000, 0.584314, 0.707843],
    [0.000000, 0.588235, 0.705882],
    [0.000000, 0.592157, 0.703922],
    [0.000000, 0.596078, 0.701961],
    [0.000000, 0.600000, 0.700000],
    [0.000000, 0.603922, 0.698039],
    [0.000000, 0.607843, 0.696078],
    [0.000000, 0.611765, 0.694118],
    [0.000000, 0.615686, 0.692157],
    [0.000000, 0.619608, 0.690196],
    [0.000000, 0.623529, 0.688235],
    [0.000000, 0.627451, 0.686275],
    [0.000000, 0.631373, 0.684314],
    [0.000000, 0.635294, 0.682353],
    [0.000000, 0.639216, 0.680392],
    [0.000000, 0.643137, 0.678431],
    [0.000000, 0.647059, 0.676471],
    [0.000000, 0.650980, 0.674510],
    [0.000000, 0.654902, 0.672549],
    [0.000000, 0.658824, 0.670588],
    [0.000000, 0.662745, 0.668627],
    [0.000000, 0.666667, 0.666667],
    [0.000000, 0.670588, 0.664706],
    [0.000000, 0.674510, 0.662745],
    [0.000000, 0.678431, 0.660784],
    [0.000000, 0.682353, 0.658824],
    [0.000000, 0.686275, 0.656863],
    [0.000000, 0.690196, 0.654902],
    [0.000000, 0.694118, 0.652941],
    [0.000000, 0.698039, 0.650980],
    [0.000000, 0.701961, 0.649020],
    [0.000000, 0.705882, 0.647059],
    [0.000000, 0.709804, 0.645098],
    [0.000000, 0.713725, 0.643137],
    [0.000000, 0.717647, 0.641176],
    [0.000000, 0.721569, 0.639216],
    [0.000000, 0.725490, 0.637255],
    [0.000000, 0.729412, 0.635294],
    [0.000000, 0.733333, 0.633333],
    [0.000000, 0.737255, 0.631373],
    [0.000000, 0.741176, 0.629412],
    [0.000000, 0.745098, 0.627451],
    [0.000000, 0.749020, 0.625490],
    [0.000000, 0.752941, 0.623529],
    [0.000000, 0.756863, 0.621569],
    [0.000000, 0.760784, 0.619608],
    [0.000000, 0.764706, 0.617647],
    [0.000000, 0.768627, 0.615686],
    [0.000000, 0.772549, 0.613725],
    [0.000000, 0.776471, 0.611765],
    [0.000000, 0.780392, 0.609804],
    [0.000000, 0.784314, 0.607843],
    [0.000000, 0.788235, 0.605882],
    [0.000000, 0.792157, 0.603922],
    [0.000000, 0.796078, 0.601961],
    [0.000000, 0.800000, 0.600000],
    [0.000000, 0.803922, 0.598039],
    [0.000000, 0.807843, 0.596078],
    [0.000000, 0.811765, 0.594118],
    [0.000000, 0.815686, 0.592157],
    [0.000000, 0.819608, 0.590196],
    [0.000000, 0.823529, 0.588235],
    [0.000000, 0.827451, 0.586275],
    [0.000000, 0.831373, 0.584314],
    [0.000000, 0.835294, 0.582353],
    [0.000000, 0.839216, 0.580392],
    [0.000000, 0.843137, 0.578431],
    [0.000000, 0.847059, 0.576471],
    [0.000000, 0.850980, 0.574510],
    [0.000000, 0.854902, 0.572549],
    [0.000000, 0.858824, 0.570588],
    [0.000000, 0.862745, 0.568627],
    [0.000000, 0.866667, 0.566667],
    [0.000000, 0.870588, 0.564706],
    [0.000000, 0.874510, 0.562745],
    [0.000000, 0.878431, 0.560784],
    [0.000000, 0.882353, 0.558824],
    [0.000000, 0.886275, 0.556863],
    [0.000000, 0.890196, 0.554902],
    [0.000000, 0.894118, 0.552941],
    [0.000000, 0.898039, 0.550980],
    [0.000000, 0.901961, 0.549020],
    [0.000000, 0.905882, 0.547059],
    [0.000000, 0.909804, 0.545098],
    [0.000000, 0.913725, 0.543137],
    [0.000000, 0.917647, 0.541176],
    [0.000000, 0.921569, 0.539216],
    [0.000000, 0.925490, 0.537255],
    [0.000000, 0.929412, 0.535294],
    [0.000000, 0.933333, 0.533333],
    [0.000000, 0.937255, 0.531373],
    [0.000000, 0.941176, 0.529412],
    [0.000000, 0.945098, 0.527451],
    [0.000000, 0.949020, 0.525490],
    [0.000000, 0.952941, 0.523529],
    [0.000000, 0.956863, 0.521569],
    [0.000000, 0.960784, 0.519608],
    [0.000000, 0.964706, 0.517647],
    [0.000000, 0.968627, 0.515686],
    [0.000000, 0.972549, 0.513725],
    [0.000000, 0.976471, 0.511765],
    [0.000000, 0.980392, 0.509804],
    [0.000000, 0.984314, 0.507843],
    [0.000000, 0.988235, 0.505882],
    [0.000000, 0.992157, 0.503922],
    [0.000000, 0.996078, 0.501961],
    [0.000000, 1.000000, 0.500000],
];

pub(crate) static TURBO: [[f64; 3]; 256] = [
    [0.189950, 0.071760, 0.232170],
    [0.194830, 0.083390, 0.261490],
    [0.199560, 0.094980, 0.290240],
    [0.204150, 0.106520, 0.318440],
    [0.208600, 0.118020, 0.346070],
    [0.212910, 0.129470, 0.373140],
    [0.217080, 0.140870, 0.399640],
    [0.221110, 0.152230, 0.425580],
    [0.225000, 0.163540, 0.450960],
    [0.228750, 0.174810, 0.475780],
    [0.232360, 0.186030, 0.500040],
    [0.235820, 0.197200, 0.523730],
    [0.239150, 0.208330, 0.546860],
    [0.242340, 0.219410, 0.569420],
    [0.245390, 0.230440, 0.591420],
    [0.248300, 0.241430, 0.612860],
    [0.251070, 0.252370, 0.633740],
    [0.253690, 0.263270, 0.654060],
    [0.256180, 0.274120, 0.673810],
    [0.258530, 0.284920, 0.693000],
    [0.260740, 0.295680, 0.711620],
    [0.262800, 0.306390, 0.729680],
    [0.264730, 0.317060, 0.747180],
    [0.266520, 0.327680, 0.764120],
    [0.268160, 0.338250, 0.780500],
    [0.269670, 0.348780, 0.796310],
    [0.271030, 0.359260, 0.811560],
    [0.272260, 0.369700, 0.826240],
    [0.273340, 0.380080, 0.840370],
    [0.274290, 0.390430, 0.853930],
    [0.275090, 0.400720, 0.866920],
    [0.275760, 0.410970, 0.879360],
    [0.276280, 0.421180, 0.891230],
    [0.276670, 0.431340, 0.902540],
    [0.276910, 0.441450, 0.913280],
    [0.277010, 0.451520, 0.923470],
    [0.276980, 0.461530, 0.933090],
    [0.276800, 0.471510, 0.942140],
    [0.276480, 0.481440, 0.950640],
    [0.276030, 0.491320, 0.958570],
    [0.275430, 0.501150, 0.965940],
    [0.274690, 0.510940, 0.972750],
    [0.273810, 0.520690, 0.978990],
    [0.272730, 0.530400, 0.984610],
    [0.271060, 0.540150, 0.989300],
    [0.268780, 0.549950, 0.993030],
    [0.265920, 0.559790, 0.995830],
    [0.262520, 0.569670, 0.997730],
    [0.258620, 0.579580, 0.998760],
    [0.254250, 0.589500, 0.998960],
    [0.249460, 0.599430, 0.998350],
    [0.244270, 0.609370, 0.996970],
    [0.238740, 0.619310, 0.994850],
    [0.232880, 0.629230, 0.992020],
    [0.226760, 0.639130, 0.988510],
    [0.220390, 0.649010, 0.984360],
    [0.213820, 0.658860, 0.979590],
    [0.207080, 0.668660, 0.974230],
    [0.200210, 0.678420, 0.968330],
    [0.193260, 0.688120, 0.961900],
    [0.186250, 0.697750, 0.954980],
    [0.179230, 0.707320, 0.947610],
    [0.172230, 0.716800, 0.939810],
    [0.165290, 0.726200, 0.931610],
    [0.158440, 0.735510, 0.923050],
    [0.151730, 0.744720, 0.914160],
    [0.145190, 0.753810, 0.904960],
    [0.138860, 0.762790, 0.895500],
    [0.132780, 0.771650, 0.885800],
    [0.126980, 0.780370, 0.875900],
    [0.121510, 0.788960, 0.865810],
    [0.116390, 0.797400, 0.855590],
    [0.111670, 0.805690, 0.845250],
    [0.107380, 0.813810, 0.834840],
    [0.103570, 0.821770, 0.824370],
    [0.100260, 0.829550, 0.813890],
    [0.097500, 0.837140, 0.803420],
    [0.095320, 0.844550, 0.792990],
    [0.093770, 0.851750, 0.782640],
    [0.092870, 0.858750, 0.772400],
    [0.092670, 0.865540, 0.762300],
    [0.093200, 0.872110, 0.752370],
    [0.094510, 0.878440, 0.742650],
    [0.096620, 0.884540, 0.733160],
    [0.099580, 0.890400, 0.723930],
    [0.103420, 0.896000, 0.715000],
    [0.108150, 0.901420, 0.705990],
    [0.113740, 0.906730, 0.696510],
    [0.120140, 0.911930, 0.686600],
    [0.127330, 0.917010, 0.676270],
    [0.135260, 0.921970, 0.665560],
    [0.143910, 0.926800, 0.654480],
    [0.153230, 0.931510, 0.643080],
    [0.163190, 0.936090, 0.631370],
    [0.173770, 0.940530, 0.619380],
    [0.184910, 0.944840, 0.607130],
    [0.196590, 0.949010, 0.594660],
    [0.208770, 0.953040, 0.581990],
    [0.221420, 0.956920, 0.569140],
    [0.234490, 0.960650, 0.556140],
    [0.247970, 0.964230, 0.543030],
    [0.261800, 0.967650, 0.529810],
    [0.275970, 0.970920, 0.516530],
    [0.290420, 0.974030, 0.503210],
    [0.305130, 0.976970, 0.489870],
    [0.320060, 0.979740, 0.476540],
    [0.335170, 0.982340, 0.463250],
    [0.350430, 0.984770, 0.450020],
    [0.365810, 0.987020, 0.436880],
    [0.381270, 0.989090, 0.423860],
    [0.396780, 0.990980, 0.410980],
    [0.412290, 0.992680, 0.398260],
    [0.427780, 0.994190, 0.385750],
    [0.443210, 0.995510, 0.373450],
    [0.458540, 0.996630, 0.361400],
    [0.473750, 0.997550, 0.349630],
    [0.488790, 0.998280, 0.338160],
    [0.503620, 0.998790, 0.327010],
    [0.518220, 0.999100, 0.316220],
    [0.532550, 0.999190, 0.305810],
    [0.546580, 0.999070, 0.295810],
    [0.560260, 0.998730, 0.286230],
    [0.573570, 0.998170, 0.277120],
    [0.586460, 0.997390, 0.268490],
    [0.598910, 0.996380, 0.260380],
    [0.610880, 0.995140, 0.252800],
    [0.622330, 0.993660, 0.245790],
    [0.633230, 0.991950, 0.239370],
    [0.643620, 0.989990, 0.233560],
    [0.653940, 0.987750, 0.228350],
    [0.664280, 0.985240, 0.223700],
    [0.674620, 0.982460, 0.219600],
    [0.684940, 0.979410, 0.216020],
    [0.695250, 0.976100, 0.212940],
    [0.705530, 0.972550, 0.210320],
    [0.715770, 0.968750, 0.208150],
    [0.725960, 0.964700, 0.206400],
    [0.736100, 0.960430, 0.205040],
    [0.746170, 0.955930, 0.204060],
    [0.756170, 0.951210, 0.203430],
    [0.766080, 0.946270, 0.203110],
    [0.775910, 0.941130, 0.203100],
    [0.785630, 0.935790, 0.203360],
    [0.795240, 0.930250, 0.203860],
    [0.804730, 0.924520, 0.204590],
    [0.814100, 0.918610, 0.205520],
    [0.823330, 0.912530, 0.206630],
    [0.832410, 0.906270, 0.207880],
    [0.841330, 0.899860, 0.209260],
    [0.850100, 0.893280, 0.210740],
    [0.858680, 0.886550, 0.212300],
    [0.867090, 0.879680, 0.213910],
    [0.875300, 0.872670, 0.215550],
    [0.883310, 0.865530, 0.217190],
    [0.891120, 0.858260, 0.218800],
    [0.898700, 0.850870, 0.220380],
    [0.906050, 0.843370, 0.221880],
    [0.913170, 0.835760, 0.223280],
    [0.920040, 0.828060, 0.224560],
    [0.926660, 0.820250, 0.225700],
    [0.933010, 0.812360, 0.226670],
    [0.939090, 0.804390, 0.227440],
    [0.944890, 0.796340, 0.228000],
    [0.950390, 0.788230, 0.228310],
    [0.955600, 0.780050, 0.228360],
    [0.960490, 0.771810, 0.228110],
    [0.965070, 0.763520, 0.227540],
    [0.969310, 0.755190, 0.226630],
    [0.973230, 0.746820, 0.225360],
    [0.976790, 0.738420, 0.223690],
    [0.980000, 0.730000, 0.221610],
    [0.982890, 0.721400, 0.219180],
    [0.985490, 0.712500, 0.216500],
    [0.987810, 0.703300, 0.213580],
    [0.989860, 0.693820, 0.210430],
    [0.991630, 0.684080, 0.207060],
    [0.993140, 0.674080, 0.203480],
    [0.994380, 0.663860, 0.199710],
    [0.995350, 0.653410, 0.195770],
    [0.996070, 0.642770, 0.191650],
    [0.996540, 0.631930, 0.187380],
    [0.996750, 0.620930, 0.182970],
    [0.996720, 0.609770, 0.178420],
    [0.996440, 0.598460, 0.173760],
    [0.995930, 0.587030, 0.168990],
    [0.995170, 0.575490, 0.164120],
    [0.994190, 0.563860, 0.159180],
    [0.992970, 0.552140, 0.154170],
    [0.991530, 0.540360, 0.149100],
    [0.989870, 0.528540, 0.143980],
    [0.987990, 0.516670, 0.138830],
    [0.985900, 0.504790, 0.133670],
    [0.983600, 0.492910, 0.128490],
    [0.981080, 0.481040, 0.123320],
    [0.978370, 0.469200, 0.118170],
    [0.975450, 0.457400, 0.113050],
    [0.972340, 0.445650, 0.107970],
    [0.969040, 0.433990, 0.102940],
    [0.965550, 0.422410, 0.097980],
    [0.961870, 0.410930, 0.093100],
    [0.958010, 0.399580, 0.088310],
    [0.953980, 0.388360, 0.083620],
    [0.949770, 0.377290, 0.079050],
    [0.945380, 0.366380, 0.074610],
    [0.940840, 0.355660, 0.070310],
    [0.936120, 0.345130, 0.066160],
    [0.931250, 0.334820, 0.062180],
    [0.926230, 0.324730, 0.058370],
    [0.921050, 0.314890, 0.054750],
    [0.915720, 0.305300, 0.051340],
    [0.910240, 0.295990, 0.048140],
    [0.904630, 0.286960, 0.045160],
    [0.898880, 0.278240, 0.042430],
    [0.892980, 0.269810, 0.039930],
    [0.886910, 0.261520, 0.037530],
    [0.880660, 0.253340, 0.035210],
    [0.874220, 0.245260, 0.032970],
    [0.867600, 0.237300, 0.030820],
    [0.860790, 0.229450, 0.028750],
    [0.853800, 0.221700, 0.026770],
    [0.846620, 0.214070, 0.024870],
    [0.839260, 0.206540, 0.023050],
    [0.831720, 0.199120, 0.021310],
    [0.823990, 0.191820, 0.019660],
    [0.816080, 0.184620, 0.018090],
    [0.807990, 0.177530, 0.016600],
    [0.799710, 0.170550, 0.015200],
    [0.791250, 0.163680, 0.013870],
    [0.782600, 0.156930, 0.012640],
    [0.773770, 0.150280, 0.011480],
    [0.764760, 0.143740, 0.010410],
    [0.755560, 0.137310, 0.009420],
    [0.746170, 0.130980, 0.008510],
    [0.736610, 0.124770, 0.007690],
    [0.726860, 0.118670, 0.006950],
    [0.716920, 0.112680, 0.006290],
    [0.706800, 0.106800, 0.005710],
    [0.696500, 0.101020, 0.005220],
    [0.686020, 0.095360, 0.004810],
    [0.675350, 0.089800, 0.004490],
    [0.664490, 0.084360, 0.004240],
    [0.653450, 0.079020, 0.004080],
    [0.642230, 0.073800, 0.004010],
    [0.630820, 0.068680, 0.004010],
    [0.619230, 0.063670, 0.004100],
    [0.607460, 0.058780, 0.004270],
    [0.595500, 0.053990, 0.004530],
    [0.583360, 0.049310, 0.004860],
    [0.571030, 0.044740, 0.005290],
    [0.558520, 0.040280, 0.005790],
    [0.545830, 0.035930, 0.006380],
    [0.532950, 0.031690, 0.007050],
    [0.519890, 0.027560, 0.007800],
    [0.506640, 0.023540, 0.008630],
    [0.493210, 0.019630, 0.009550],
    [0.479600, 0.015830, 0.010550],
];

pub(crate) static RAINBOW: [[f64; 3]; 256] = [
    [0.500000, 0.000000, 1.000000],
    [0.492157, 0.012320, 0.999981],
    [0.484314, 0.024637, 0.999924],
    [0.476471, 0.036951, 0.999829],
    [0.468627, 0.049260, 0.999696],
    [0.460784, 0.061561, 0.999526],
    [0.452941, 0.073853, 0.999317],
    [0.445098, 0.086133, 0.999070],
    [0.437255, 0.098400, 0.998786],
    [0.429412, 0.110653, 0.998464],
    [0.421569, 0.122888, 0.998103],
    [0.413725, 0.135105, 0.997705],
    [0.405882, 0.147302, 0.997269],
    [0.398039, 0.159476, 0.996795],
    [0.390196, 0.171626, 0.996284],
    [0.382353, 0.183750, 0.995734],
    [0.374510, 0.195845, 0.995147],
    [0.366667, 0.207912, 0.994522],
    [0.358824, 0.219946, 0.993859],
    [0.350980, 0.231948, 0.993159],
    [0.343137, 0.243914, 0.992421],
    [0.335294, 0.255843, 0.991645],
    [0.327451, 0.267733, 0.990831],
    [0.319608, 0.279583, 0.989980],
    [0.311765, 0.291390, 0.989092],
    [0.303922, 0.303153, 0.988165],
    [0.296078, 0.314870, 0.987202],
    [0.288235, 0.326539, 0.986201],
    [0.280392, 0.338158, 0.985162],
    [0.272549, 0.349727, 0.984086],
    [0.264706, 0.361242, 0.982973],
    [0.256863, 0.372702, 0.981823],
    [0.249020, 0.384106, 0.980635],
    [0.241176, 0.395451, 0.979410],
    [0.233333, 0.406737, 0.978148],
    [0.225490, 0.417960, 0.976848],
    [0.217647, 0.429121, 0.975512],
    [0.209804, 0.440216, 0.974139],
    [0.201961, 0.451244, 0.972728],
    [0.194118, 0.462204, 0.971281],
    [0.186275, 0.473094, 0.969797],
    [0.178431, 0.483911, 0.968276],
    [0.170588, 0.494656, 0.966718],
    [0.162745, 0.505325, 0.965124],
    [0.154902, 0.515918, 0.963493],
    [0.147059, 0.526432, 0.961826],
    [0.139216, 0.536867, 0.960122],
    [0.131373, 0.547220, 0.958381],
    [0.123529, 0.557489, 0.956604],
    [0.115686, 0.567675, 0.954791],
    [0.107843, 0.577774, 0.952942],
    [0.100000, 0.587785, 0.951057],
    [0.092157, 0.597707, 0.949135],
    [0.084314, 0.607539, 0.947177],
    [0.076471, 0.617278, 0.945184],
    [0.068627, 0.626924, 0.943154],
    [0.060784, 0.636474, 0.941089],
    [0.052941, 0.645928, 0.938988],
    [0.045098, 0.655284, 0.936852],
    [0.037255, 0.664540, 0.934680],
    [0.029412, 0.673696, 0.932472],
    [0.021569, 0.682749, 0.930229],
    [0.013725, 0.691698, 0.927951],
    [0.005882, 0.700543, 0.925638],
    [0.001961, 0.709281, 0.923289],
    [0.009804, 0.717912, 0.920906],
    [0.017647, 0.726434, 0.918487],
    [0.025490, 0.734845, 0.916034],
    [0.033333, 0.743145, 0.913545],
    [0.041176, 0.751332, 0.911023],
    [0.049020, 0.759405, 0.908465],
    [0.056863, 0.767363, 0.905873],
    [0.064706, 0.775204, 0.903247],
    [0.072549, 0.782928, 0.900587],
    [0.080392, 0.790532, 0.897892],
    [0.088235, 0.798017, 0.895163],
    [0.096078, 0.805381, 0.892401],
    [0.103922, 0.812622, 0.889604],
    [0.111765, 0.819740, 0.886774],
    [0.119608, 0.826734, 0.883910],
    [0.127451, 0.833602, 0.881012],
    [0.135294, 0.840344, 0.878081],
    [0.143137, 0.846958, 0.875117],
    [0.150980, 0.853444, 0.872120],
    [0.158824, 0.859800, 0.869089],
    [0.166667, 0.866025, 0.866025],
    [0.174510, 0.872120, 0.862929],
    [0.182353, 0.878081, 0.859800],
    [0.190196, 0.883910, 0.856638],
    [0.198039, 0.889604, 0.853444],
    [0.205882, 0.895163, 0.850217],
    [0.213725, 0.900587, 0.846958],
    [0.221569, 0.905873, 0.843667],
    [0.229412, 0.911023, 0.840344],
    [0.237255, 0.916034, 0.836989],
    [0.245098, 0.920906, 0.833602],
    [0.252941, 0.925638, 0.830184],
    [0.260784, 0.930229, 0.826734],
    [0.268627, 0.934680, 0.823253],
    [0.276471, 0.938988, 0.819740],
    [0.284314, 0.943154, 0.816197],
    [0.292157, 0.947177, 0.812622],
    [0.300000, 0.951057, 0.809017],
    [0.307843, 0.954791, 0.805381],
    [0.315686, 0.958381, 0.801714],
    [0.323529, 0.961826, 0.798017],
    [0.331373, 0.965124, 0.794290],
    [0.339216, 0.968276, 0.790532],
    [0.347059, 0.971281, 0.786745],
    [0.354902, 0.974139, 0.782928],
    [0.362745, 0.976848, 0.779081],
    [0.370588, 0.979410, 0.775204],
    [0.378431, 0.981823, 0.771298],
    [0.386275, 0.984086, 0.767363],
    [0.394118, 0.986201, 0.763398],
    [0.401961, 0.988165, 0.759405],
    [0.409804, 0.989980, 0.755383],
    [0.417647, 0.991645, 0.751332],
    [0.425490, 0.993159, 0.747253],
    [0.433333, 0.994522, 0.743145],
    [0.441176, 0.995734, 0.739009],
    [0.449020, 0.996795, 0.734845],
    [0.456863, 0.997705, 0.730653],
    [0.464706, 0.998464, 0.726434],
    [0.472549, 0.999070, 0.722186],
    [0.480392, 0.999526, 0.717912],
    [0.488235, 0.999829, 0.713610],
    [0.496078, 0.999981, 0.709281],
    [0.503922, 0.999981, 0.704926],
    [0.511765, 0.999829, 0.700543],
    [0.519608, 0.999526, 0.696134],
    [0.527451, 0.999070, 0.691698],
    [0.535294, 0.998464, 0.687237],
    [0.543137, 0.997705, 0.682749],
    [0.550980, 0.996795, 0.678235],
    [0.558824, 0.995734, 0.673696],
    [0.566667, 0.994522, 0.669131],
    [0.574510, 0.993159, 0.664540],
    [0.582353, 0.991645, 0.659925],
    [0.590196, 0.989980, 0.655284],
    [0.598039, 0.988165, 0.650618],
    [0.605882, 0.986201, 0.645928],
    [0.613725, 0.984086, 0.641213],
    [0.621569, 0.981823, 0.636474],
    [0.629412, 0.979410, 0.631711],
    [0.637255, 0.976848, 0.626924],
    [0.645098, 0.974139, 0.622113],
    [0.652941, 0.971281, 0.617278],
    [0.660784, 0.968276, 0.612420],
    [0.668627, 0.965124, 0.607539],
    [0.676471, 0.961826, 0.602635],
    [0.684314, 0.958381, 0.597707],
    [0.692157, 0.954791, 0.592758],
    [0.700000, 0.951057, 0.587785],
    [0.707843, 0.947177, 0.582791],
    [0.715686, 0.943154, 0.577774],
    [0.723529, 0.938988, 0.572735],
    [0.731373, 0.934680, 0.567675],
    [0.739216, 0.930229, 0.562593],
    [0.747059, 0.925638, 0.557489],
    [0.754902, 0.920906, 0.552365],
    [0.762745, 0.916034, 0.547220],
    [0.770588, 0.911023, 0.542053],
    [0.778431, 0.905873, 0.536867],
    [0.786275, 0.900587, 0.531659],
    [0.794118, 0.895163, 0.526432],
    [0.801961, 0.889604, 0.521185],
    [0.809804, 0.883910, 0.515918],
    [0.817647, 0.878081, 0.510631],
    [0.825490, 0.872120, 0.505325],
    [0.833333, 0.866025, 0.500000],
    [0.841176, 0.859800, 0.494656],
    [0.849020, 0.853444, 0.489293],
    [0.856863, 0.846958, 0.483911],
    [0.864706, 0.840344, 0.478512],
    [0.872549, 0.833602, 0.473094],
    [0.880392, 0.826734, 0.467658],
    [0.888235, 0.819740, 0.462204],
    [0.896078, 0.812622, 0.456733],
    [0.903922, 0.805381, 0.451244],
    [0.911765, 0.798017, 0.445738],
    [0.919608, 0.790532, 0.440216],
    [0.927451, 0.782928, 0.434676],
    [0.935294, 0.775204, 0.429121],
    [0.943137, 0.767363, 0.423549],
    [0.950980, 0.759405, 0.417960],
    [0.958824, 0.751332, 0.412356],
    [0.966667, 0.743145, 0.406737],
    [0.974510, 0.734845, 0.401102],
    [0.982353, 0.726434, 0.395451],
    [0.990196, 0.717912, 0.389786],
    [0.998039, 0.709281, 0.384106],
    [1.000000, 0.700543, 0.378411],
    [1.000000, 0.691698, 0.372702],
    [1.000000, 0.682749, 0.366979],
    [1.000000, 0.673696, 0.361242],
    [1.000000, 0.664540, 0.355491],
    [1.000000, 0.655284, 0.349727],
    [1.000000, 0.645928, 0.343949],
    [1.000000, 0.636474, 0.338158],
    [1.000000, 0.626924, 0.332355],
    [1.000000, 0.617278, 0.326539],
    [1.000000, 0.607539, 0.320710],
    [1.000000, 0.597707, 0.314870],
    [1.000000, 0.587785, 0.309017],
    [1.000000, 0.577774, 0.303153],
    [1.000000, 0.567675, 0.297277],
    [1.000000, 0.557489, 0.291390],
    [1.000000, 0.547220, 0.285492],
    [1.000000, 0.536867, 0.279583],
    [1.000000, 0.526432, 0.273663],
    [1.000000, 0.515918, 0.267733],
    [1.000000, 0.505325, 0.261793],
    [1.000000, 0.494656, 0.255843],
    [1.000000, 0.483911, 0.249883],
    [1.000000, 0.473094, 0.243914],
    [1.000000, 0.462204, 0.237935],
    [1.000000, 0.451244, 0.231948],
    [1.000000, 0.440216, 0.225951],
    [1.000000, 0.429121, 0.219946],
    [1.000000, 0.417960, 0.213933],
    [1.000000, 0.406737, 0.207912],
    [1.000000, 0.395451, 0.201882],
    [1.000000, 0.384106, 0.195845],
    [1.000000, 0.372702, 0.189801],
    [1.000000, 0.361242, 0.183750],
    [1.000000, 0.349727, 0.177691],
    [1.000000, 0.338158, 0.171626],
    [1.000000, 0.326539, 0.165554],
    [1.000000, 0.314870, 0.159476],
    [1.000000, 0.303153, 0.153392],
    [1.000000, 0.291390, 0.147302],
    [1.000000, 0.279583, 0.141206],
    [1.000000, 0.267733, 0.135105],
    [1.000000, 0.255843, 0.128999],
    [1.000000, 0.243914, 0.122888],
    [1.000000, 0.231948, 0.116773],
    [1.000000, 0.219946, 0.110653],
    [1.000000, 0.207912, 0.104528],
    [1.000000, 0.195845, 0.098400],
    [1.000000, 0.183750, 0.092268],
    [1.000000, 0.171626, 0.086133],
    [1.000000, 0.159476, 0.079994],
    [1.000000, 0.147302, 0.073853],
    [1.000000, 0.135105, 0.067708],
    [1.000000, 0.122888, 0.061561],
    [1.000000, 0.110653, 0.055411],
    [1.000000, 0.098400, 0.049260],
    [1.000000, 0.086133, 0.043107],
    [1.000000, 0.073853, 0.036951],
    [1.000000, 0.061561, 0.030795],
    [1.000000, 0.049260, 0.024637],
    [1.000000, 0.036951, 0.018479],
    [1.000000, 0.024637, 0.012320],
    [1.000000, 0.012320, 0.006160],
    [1.000000, 0.000000, 0.000000],
];

pub(crate) static COOLWARM: [[f64; 3]; 256] = [
    [0.229806, 0.298718, 0.753683],
    [0.234377, 0.305542, 0.759680],
    [0.238948, 0.312365, 0.765676],
    [0.243520, 0.319189, 0.771672],
    [0.248091, 0.326013, 0.777669],
    [0.252663, 0.332837, 0.783665],
    [0.257234, 0.339661, 0.789661],
    [0.261805, 0.346484, 0.795658],
    [0.266381, 0.353304, 0.801637],
    [0.271104, 0.360011, 0.807095],
    [0.275827, 0.366717, 0.812553],
    [0.280550, 0.373423, 0.818011],
    [0.285273, 0.380129, 0.823469],
    [0.289996, 0.386836, 0.828926],
    [0.294718, 0.393542, 0.834384],
    [0.299441, 0.400248, 0.839842],
    [0.304174, 0.406945, 0.845263],
    [0.309060, 0.413498, 0.850128],
    [0.313946, 0.420052, 0.854993],
    [0.318832, 0.426605, 0.859857],
    [0.323718, 0.433158, 0.864722],
    [0.328604, 0.439712, 0.869587],
    [0.333490, 0.446265, 0.874452],
    [0.338377, 0.452819, 0.879317],
    [0.343278, 0.459354, 0.884122],
    [0.348323, 0.465711, 0.888346],
    [0.353369, 0.472069, 0.892570],
    [0.358415, 0.478426, 0.896795],
    [0.363461, 0.484784, 0.901019],
    [0.368507, 0.491141, 0.905243],
    [0.373552, 0.497499, 0.909467],
    [0.378598, 0.503856, 0.913692],
    [0.383662, 0.510183, 0.917831],
    [0.388852, 0.516298, 0.921373],
    [0.394042, 0.522413, 0.924916],
    [0.399231, 0.528528, 0.928459],
    [0.404421, 0.534643, 0.932002],
    [0.409611, 0.540759, 0.935545],
    [0.414801, 0.546874, 0.939088],
    [0.419991, 0.552989, 0.942630],
    [0.425199, 0.559058, 0.946061],
    [0.430507, 0.564883, 0.948889],
    [0.435815, 0.570707, 0.951717],
    [0.441123, 0.576532, 0.954545],
    [0.446431, 0.582356, 0.957373],
    [0.451739, 0.588181, 0.960201],
    [0.457046, 0.594006, 0.963029],
    [0.462354, 0.599830, 0.965857],
    [0.467678, 0.605591, 0.968546],
    [0.473070, 0.611077, 0.970634],
    [0.478462, 0.616564, 0.972721],
    [0.483854, 0.622050, 0.974808],
    [0.489246, 0.627536, 0.976896],
    [0.494638, 0.633022, 0.978983],
    [0.500031, 0.638508, 0.981070],
    [0.505423, 0.643995, 0.983157],
    [0.510824, 0.649397, 0.985079],
    [0.516260, 0.654498, 0.986407],
    [0.521696, 0.659599, 0.987736],
    [0.527132, 0.664700, 0.989065],
    [0.532568, 0.669801, 0.990393],
    [0.538004, 0.674902, 0.991722],
    [0.543440, 0.680003, 0.993051],
    [0.548876, 0.685104, 0.994379],
    [0.554312, 0.690097, 0.995516],
    [0.559747, 0.694768, 0.996075],
    [0.565182, 0.699438, 0.996635],
    [0.570616, 0.704109, 0.997195],
    [0.576051, 0.708780, 0.997755],
    [0.581486, 0.713451, 0.998314],
    [0.586921, 0.718121, 0.998874],
    [0.592356, 0.722792, 0.999434],
    [0.597777, 0.727330, 0.999777],
    [0.603162, 0.731527, 0.999565],
    [0.608547, 0.735725, 0.999354],
    [0.613933, 0.739923, 0.999142],
    [0.619318, 0.744121, 0.998931],
    [0.624703, 0.748318, 0.998719],
    [0.630089, 0.752516, 0.998508],
    [0.635474, 0.756714, 0.998297],
    [0.640828, 0.760752, 0.997846],
    [0.646113, 0.764436, 0.996868],
    [0.651398, 0.768121, 0.995891],
    [0.656683, 0.771806, 0.994914],
    [0.661968, 0.775491, 0.993937],
    [0.667253, 0.779176, 0.992959],
    [0.672538, 0.782861, 0.991982],
    [0.677823, 0.786546, 0.991005],
    [0.683056, 0.790043, 0.989768],
    [0.688188, 0.793178, 0.988038],
    [0.693321, 0.796314, 0.986308],
    [0.698454, 0.799450, 0.984577],
    [0.703587, 0.802586, 0.982847],
    [0.708720, 0.805721, 0.981117],
    [0.713852, 0.808857, 0.979386],
    [0.718985, 0.811993, 0.977656],
    [0.724041, 0.814910, 0.975651],
    [0.728970, 0.817464, 0.973188],
    [0.733898, 0.820018, 0.970724],
    [0.738826, 0.822572, 0.968261],
    [0.743754, 0.825125, 0.965798],
    [0.748682, 0.827679, 0.963334],
    [0.753611, 0.830233, 0.960871],
    [0.758539, 0.832787, 0.958408],
    [0.763363, 0.835092, 0.955658],
    [0.768034, 0.837035, 0.952488],
    [0.772706, 0.838978, 0.949319],
    [0.777378, 0.840921, 0.946149],
    [0.782049, 0.842864, 0.942980],
    [0.786721, 0.844807, 0.939810],
    [0.791392, 0.846750, 0.936641],
    [0.796064, 0.848693, 0.933471],
    [0.800601, 0.850358, 0.930008],
    [0.804965, 0.851666, 0.926165],
    [0.809329, 0.852974, 0.922323],
    [0.813693, 0.854282, 0.918480],
    [0.818056, 0.855590, 0.914638],
    [0.822420, 0.856898, 0.910795],
    [0.826784, 0.858205, 0.906953],
    [0.831148, 0.859513, 0.903110],
    [0.835345, 0.860514, 0.898970],
    [0.839351, 0.861167, 0.894494],
    [0.843358, 0.861820, 0.890017],
    [0.847365, 0.862472, 0.885540],
    [0.851372, 0.863125, 0.881064],
    [0.855378, 0.863778, 0.876587],
    [0.859385, 0.864431, 0.872111],
    [0.863392, 0.865084, 0.867634],
    [0.867428, 0.864377, 0.862602],
    [0.871493, 0.862309, 0.857016],
    [0.875557, 0.860242, 0.851430],
    [0.879622, 0.858175, 0.845844],
    [0.883687, 0.856108, 0.840258],
    [0.887752, 0.854040, 0.834671],
    [0.891817, 0.851973, 0.829085],
    [0.895882, 0.849906, 0.823499],
    [0.899543, 0.847500, 0.817789],
    [0.902849, 0.844796, 0.811970],
    [0.906154, 0.842091, 0.806151],
    [0.909460, 0.839386, 0.800331],
    [0.912765, 0.836682, 0.794512],
    [0.916071, 0.833977, 0.788693],
    [0.919376, 0.831273, 0.782874],
    [0.922681, 0.828568, 0.777054],
    [0.925563, 0.825517, 0.771136],
    [0.928116, 0.822197, 0.765141],
    [0.930669, 0.818877, 0.759146],
    [0.933221, 0.815557, 0.753151],
    [0.935774, 0.812237, 0.747156],
    [0.938326, 0.808917, 0.741162],
    [0.940879, 0.805596, 0.735167],
    [0.943432, 0.802276, 0.729172],
    [0.945540, 0.798606, 0.723105],
    [0.947345, 0.794696, 0.716991],
    [0.949151, 0.790785, 0.710876],
    [0.950956, 0.786875, 0.704761],
    [0.952761, 0.782965, 0.698646],
    [0.954566, 0.779055, 0.692531],
    [0.956371, 0.775144, 0.686416],
    [0.958176, 0.771234, 0.680301],
    [0.959518, 0.766973, 0.674145],
    [0.960581, 0.762501, 0.667964],
    [0.961645, 0.758029, 0.661782],
    [0.962708, 0.753557, 0.655601],
    [0.963772, 0.749086, 0.649420],
    [0.964835, 0.744614, 0.643239],
    [0.965899, 0.740142, 0.637058],
    [0.966962, 0.735670, 0.630877],
    [0.967544, 0.730850, 0.624685],
    [0.967874, 0.725847, 0.618489],
    [0.968203, 0.720844, 0.612293],
    [0.968533, 0.715841, 0.606097],
    [0.968863, 0.710838, 0.599901],
    [0.969192, 0.705836, 0.593704],
    [0.969522, 0.700833, 0.587508],
    [0.969851, 0.695830, 0.581312],
    [0.969683, 0.690484, 0.575138],
    [0.969289, 0.684982, 0.568975],
    [0.968894, 0.679480, 0.562812],
    [0.968500, 0.673977, 0.556649],
    [0.968105, 0.668475, 0.550486],
    [0.967711, 0.662973, 0.544323],
    [0.967317, 0.657471, 0.538160],
    [0.966922, 0.651969, 0.531997],
    [0.966017, 0.646130, 0.525890],
    [0.964911, 0.640159, 0.519806],
    [0.963806, 0.634188, 0.513721],
    [0.962701, 0.628218, 0.507636],
    [0.961595, 0.622247, 0.501551],
    [0.960490, 0.616276, 0.495467],
    [0.959385, 0.610306, 0.489382],
    [0.958279, 0.604335, 0.483297],
    [0.956653, 0.598034, 0.477302],
    [0.954853, 0.591622, 0.471337],
    [0.953054, 0.585211, 0.465373],
    [0.951254, 0.578799, 0.459408],
    [0.949454, 0.572388, 0.453443],
    [0.947654, 0.565976, 0.447478],
    [0.945854, 0.559565, 0.441513],
    [0.944055, 0.553153, 0.435548],
    [0.941728, 0.546413, 0.429707],
    [0.939254, 0.539581, 0.423900],
    [0.936780, 0.532750, 0.418093],
    [0.934305, 0.525918, 0.412286],
    [0.931831, 0.519086, 0.406480],
    [0.929357, 0.512254, 0.400673],
    [0.926883, 0.505422, 0.394866],
    [0.924409, 0.498590, 0.389059],
    [0.921406, 0.491420, 0.383408],
    [0.918282, 0.484173, 0.377794],
    [0.915157, 0.476927, 0.372179],
    [0.912033, 0.469680, 0.366565],
    [0.908908, 0.462433, 0.360950],
    [0.905783, 0.455186, 0.355336],
    [0.902659, 0.447939, 0.349721],
    [0.899534, 0.440692, 0.344107],
    [0.895885, 0.433075, 0.338681],
    [0.892138, 0.425389, 0.333289],
    [0.888390, 0.417703, 0.327898],
    [0.884643, 0.410017, 0.322507],
    [0.880896, 0.402331, 0.317115],
    [0.877149, 0.394645, 0.311724],
    [0.873402, 0.386960, 0.306332],
    [0.869655, 0.379274, 0.300941],
    [0.865391, 0.371128, 0.295769],
    [0.861054, 0.362916, 0.290628],
    [0.856716, 0.354704, 0.285487],
    [0.852378, 0.346492, 0.280346],
    [0.848040, 0.338280, 0.275206],
    [0.843703, 0.330068, 0.270065],
    [0.839365, 0.321856, 0.264924],
    [0.835027, 0.313644, 0.259783],
    [0.830187, 0.304733, 0.254891],
    [0.825294, 0.295749, 0.250025],
    [0.820401, 0.286765, 0.245160],
    [0.815508, 0.277781, 0.240294],
    [0.810616, 0.268797, 0.235428],
    [0.805723, 0.259813, 0.230562],
    [0.800830, 0.250829, 0.225696],
    [0.795938, 0.241845, 0.220830],
    [0.790562, 0.231397, 0.216242],
    [0.785153, 0.220851, 0.211673],
    [0.779745, 0.210305, 0.207104],
    [0.774337, 0.199759, 0.202535],
    [0.768929, 0.189213, 0.197965],
    [0.763520, 0.178667, 0.193396],
    [0.758112, 0.168122, 0.188827],
    [0.752704, 0.157576, 0.184258],
    [0.746838, 0.140021, 0.179996],
    [0.740957, 0.122240, 0.175744],
    [0.735077, 0.104460, 0.171492],
    [0.729196, 0.086679, 0.167240],
    [0.723315, 0.068898, 0.162989],
    [0.717435, 0.051118, 0.158737],
    [0.711554, 0.033337, 0.154485],
    [0.705673, 0.015556, 0.150233],
];
