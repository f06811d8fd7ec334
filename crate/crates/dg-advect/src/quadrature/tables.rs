// Generated by scripts/generate_tables.py; do not edit by hand.

/// (points, weights) of the triangle rules, indexed by order - 1.
pub const TRIANGLE_RULES: [(&[[f64; 2]], &[f64]); 9] = [
    // order 1, 1 points
    (&[[0.33333333333333333, 0.33333333333333333]],
     &[0.50000000000000000]),
    // order 2, 3 points
    (&[[0.16666666666666667, 0.16666666666666667], [0.66666666666666667, 0.16666666666666667], [0.16666666666666667, 0.66666666666666667]],
     &[0.16666666666666667, 0.16666666666666667, 0.16666666666666667]),
    // order 3, 4 points
    (&[[0.17855872826361642, 0.15505102572168219], [0.66639024601470139, 0.15505102572168219], [0.075031110222608118, 0.64494897427831781], [0.28001991549907407, 0.64494897427831781]],
     &[0.15902069087198858, 0.15902069087198858, 0.090979309128011415, 0.090979309128011415]),
    // order 4, 9 points
    (&[[0.10271765480962627, 0.088587959512703947], [0.45570602024364803, 0.088587959512703947], [0.80869438567766978, 0.088587959512703947], [0.066554067839164504, 0.40946686444073471], [0.29526656777963264, 0.40946686444073471], [0.52397906772010079, 0.40946686444073471], [0.023931132287080619, 0.78765946176084706], [0.10617026911957647, 0.78765946176084706], [0.18840940595207233, 0.78765946176084706]],
     &[0.055814420483044342, 0.089303072772870947, 0.055814420483044342, 0.063678085099885069, 0.10188493615981611, 0.063678085099885069, 0.019396383305959478, 0.031034213289535166, 0.019396383305959478]),
    // order 5, 9 points
    (&[[0.10271765480962627, 0.088587959512703947], [0.45570602024364803, 0.088587959512703947], [0.80869438567766978, 0.088587959512703947], [0.066554067839164504, 0.40946686444073471], [0.29526656777963264, 0.40946686444073471], [0.52397906772010079, 0.40946686444073471], [0.023931132287080619, 0.78765946176084706], [0.10617026911957647, 0.78765946176084706], [0.18840940595207233, 0.78765946176084706]],
     &[0.055814420483044342, 0.089303072772870947, 0.055814420483044342, 0.063678085099885069, 0.10188493615981611, 0.063678085099885069, 0.019396383305959478, 0.031034213289535166, 0.019396383305959478]),
    // order 6, 16 points
    (&[[0.065466994555014464, 0.057104196114517682], [0.31116455224435703, 0.057104196114517682], [0.63173125164112528, 0.057104196114517682], [0.87742880933046785, 0.057104196114517682], [0.050210123211369772, 0.27684301363812383], [0.23864865973144292, 0.27684301363812383], [0.48450832663043325, 0.27684301363812383], [0.67294686315050640, 0.27684301363812383], [0.028912084224389013, 0.58359043236891682], [0.13741910413457437, 0.58359043236891682], [0.27899046349650881, 0.58359043236891682], [0.38749748340669417, 0.58359043236891682], [0.0097037851269461122, 0.86024013565621945], [0.046122079906452049, 0.86024013565621945], [0.093637784437328504, 0.86024013565621945], [0.13005607921683444, 0.86024013565621945]],
     &[0.023568368193382332, 0.044185088522361726, 0.044185088522361726, 0.023568368193382332, 0.035388067898085946, 0.066344216107049734, 0.066344216107049734, 0.035388067898085946, 0.022584049282369931, 0.042339724521746289, 0.042339724521746289, 0.022584049282369931, 0.0054232259105252545, 0.010167259564478787, 0.010167259564478787, 0.0054232259105252545]),
    // order 7, 16 points
    (&[[0.065466994555014464, 0.057104196114517682], [0.31116455224435703, 0.057104196114517682], [0.63173125164112528, 0.057104196114517682], [0.87742880933046785, 0.057104196114517682], [0.050210123211369772, 0.27684301363812383], [0.23864865973144292, 0.27684301363812383], [0.48450832663043325, 0.27684301363812383], [0.67294686315050640, 0.27684301363812383], [0.028912084224389013, 0.58359043236891682], [0.13741910413457437, 0.58359043236891682], [0.27899046349650881, 0.58359043236891682], [0.38749748340669417, 0.58359043236891682], [0.0097037851269461122, 0.86024013565621945], [0.046122079906452049, 0.86024013565621945], [0.093637784437328504, 0.86024013565621945], [0.13005607921683444, 0.86024013565621945]],
     &[0.023568368193382332, 0.044185088522361726, 0.044185088522361726, 0.023568368193382332, 0.035388067898085946, 0.066344216107049734, 0.066344216107049734, 0.035388067898085946, 0.022584049282369931, 0.042339724521746289, 0.042339724521746289, 0.022584049282369931, 0.0054232259105252545, 0.010167259564478787, 0.010167259564478787, 0.0054232259105252545]),
    // order 8, 25 points
    (&[[0.045042593569803723, 0.039809857051468742], [0.22157860955237920, 0.039809857051468742], [0.48009507147426563, 0.039809857051468742], [0.73861153339615206, 0.039809857051468742], [0.91514754937872753, 0.039809857051468742], [0.037621252345111192, 0.19801341787360817], [0.18507071026738943, 0.19801341787360817], [0.40099329106319591, 0.19801341787360817], [0.61691587185900239, 0.19801341787360817], [0.76436532978128064, 0.19801341787360817], [0.026364644944470917, 0.43797481024738614], [0.12969593678225412, 0.43797481024738614], [0.28101259487630693, 0.43797481024738614], [0.43232925297035973, 0.43797481024738614], [0.53566054480814294, 0.43797481024738614], [0.014285794395571385, 0.69546427335363609], [0.070276292008281721, 0.69546427335363609], [0.15226786332318195, 0.69546427335363609], [0.23425943463808218, 0.69546427335363609], [0.29024993225079252, 0.69546427335363609], [0.0046222884650464285, 0.90146491420117357], [0.022738483063764035, 0.90146491420117357], [0.049267542899413213, 0.90146491420117357], [0.075796602735062392, 0.90146491420117357], [0.093912797333779998, 0.90146491420117357]],
     &[0.011465080351592548, 0.023161221929498386, 0.027528985664469811, 0.023161221929498386, 0.011465080351592548, 0.019804083132047354, 0.040007287386160424, 0.047551897057954010, 0.040007287386160424, 0.019804083132047354, 0.017341506431365700, 0.035032504503371720, 0.041638965215194968, 0.035032504503371720, 0.017341506431365700, 0.0087554991821638317, 0.017687452110483466, 0.021022967487322075, 0.017687452110483466, 0.0087554991821638317, 0.0018655521668778384, 0.0037687016953276204, 0.0044794067972813586, 0.0037687016953276204, 0.0018655521668778384]),
    // order 9, 25 points
    (&[[0.045042593569803723, 0.039809857051468742], [0.22157860955237920, 0.039809857051468742], [0.48009507147426563, 0.039809857051468742], [0.73861153339615206, 0.039809857051468742], [0.91514754937872753, 0.039809857051468742], [0.037621252345111192, 0.19801341787360817], [0.18507071026738943, 0.19801341787360817], [0.40099329106319591, 0.19801341787360817], [0.61691587185900239, 0.19801341787360817], [0.76436532978128064, 0.19801341787360817], [0.026364644944470917, 0.43797481024738614], [0.12969593678225412, 0.43797481024738614], [0.28101259487630693, 0.43797481024738614], [0.43232925297035973, 0.43797481024738614], [0.53566054480814294, 0.43797481024738614], [0.014285794395571385, 0.69546427335363609], [0.070276292008281721, 0.69546427335363609], [0.15226786332318195, 0.69546427335363609], [0.23425943463808218, 0.69546427335363609], [0.29024993225079252, 0.69546427335363609], [0.0046222884650464285, 0.90146491420117357], [0.022738483063764035, 0.90146491420117357], [0.049267542899413213, 0.90146491420117357], [0.075796602735062392, 0.90146491420117357], [0.093912797333779998, 0.90146491420117357]],
     &[0.011465080351592548, 0.023161221929498386, 0.027528985664469811, 0.023161221929498386, 0.011465080351592548, 0.019804083132047354, 0.040007287386160424, 0.047551897057954010, 0.040007287386160424, 0.019804083132047354, 0.017341506431365700, 0.035032504503371720, 0.041638965215194968, 0.035032504503371720, 0.017341506431365700, 0.0087554991821638317, 0.017687452110483466, 0.021022967487322075, 0.017687452110483466, 0.0087554991821638317, 0.0018655521668778384, 0.0037687016953276204, 0.0044794067972813586, 0.0037687016953276204, 0.0018655521668778384]),
];

/// (points, weights) of the Gauss-Legendre rules on (0,1),
/// indexed by point count - 1; an n-point rule has order 2n-1.
pub const GAUSS_RULES: [(&[f64], &[f64]); 6] = [
    // 1 points, order 1
    (&[0.50000000000000000],
     &[1.0000000000000000]),
    // 2 points, order 3
    (&[0.21132486540518712, 0.78867513459481288],
     &[0.50000000000000000, 0.50000000000000000]),
    // 3 points, order 5
    (&[0.11270166537925831, 0.50000000000000000, 0.88729833462074169],
     &[0.27777777777777778, 0.44444444444444444, 0.27777777777777778]),
    // 4 points, order 7
    (&[0.069431844202973712, 0.33000947820757187, 0.66999052179242813, 0.93056815579702629],
     &[0.17392742256872693, 0.32607257743127307, 0.32607257743127307, 0.17392742256872693]),
    // 5 points, order 9
    (&[0.046910077030668004, 0.23076534494715845, 0.50000000000000000, 0.76923465505284155, 0.95308992296933200],
     &[0.11846344252809454, 0.23931433524968323, 0.28444444444444444, 0.23931433524968323, 0.11846344252809454]),
    // 6 points, order 11
    (&[0.033765242898423986, 0.16939530676686774, 0.38069040695840155, 0.61930959304159845, 0.83060469323313226, 0.96623475710157601],
     &[0.085662246189585173, 0.18038078652406930, 0.23395696728634552, 0.23395696728634552, 0.18038078652406930, 0.085662246189585173]),
];
