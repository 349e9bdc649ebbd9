// Generated by gen_expected.py; do not edit.
#pragma once

#include <array>

namespace expected {

struct Ref {
    const char* what;
    std::array<double, 8> args;
    double value;
};

inline constexpr Ref kRefs[] = {
    {"gamma", {7.3}, 1271.4236336639092731},
    {"upper_inc_gamma", {0.0, 1.0}, 0.21938393439552027368},
    {"lower_inc_gamma", {1.5, 2.0}, 0.65451037345177732033},
    {"gaussian_q", {1.0}, 0.15865525393145705141},
    {"bessel_i", {1.3, 2.7}, 2.5890996189771925163},
    {"kummer_1f1", {1.5, 2.0, 0.18}, 1.1456788214926027518},
    {"marcum_q", {1.0, 0.6, 0.4}, 0.93532407575228602642},
    {"marcum_q", {1.5, 1.2, 2.0}, 0.45196542365466076757},
    {"marcum_q", {2.5, 0.3, 1.7}, 0.7248470206052500061},
    {"marcum_q", {4.0, 2.0, 3.0}, 0.6639534637953509189},
    {"marcum_q", {0.7, 1.0, 0.5}, 0.84664999383218691171},
    {"nuttall", {0.7, 0.3, 0.6, 0.4}, 0.69564040133229195662},
    {"nuttall", {1.6, 1.4, 0.6, 0.4}, 0.28902328319492103505},
    {"nuttall", {0.7, 0.3, 0.9, 0.4}, 0.75797165400780924446},
    {"nuttall", {1.2, 1.8, 2.0, 2.0}, 0.53786400079074367625},
    {"nuttall", {3.0, 1.0, 1.0, 1.0}, 2.0592627570612801178},
    {"nuttall", {2.5, 0.5, 1.5, 2.5}, 1.2110895470880783032},
    {"nuttall", {0.4, 1.2, 2.2, 0.3}, 0.50846797339034226679},
    {"nuttall", {1.1, 0.8, 1.7, 1.4}, 0.73035796712591429243},
    {"nuttall", {2.0, 1.0, 0.5, 0.5}, 0.49681060488361396431},
    {"nuttall", {1.0, 0.0, 3.0, 2.0}, 0.88672075440239225704},
    {"toronto", {2.0, 0.5, 2.0, 3.0}, 0.86946195929847322517},
    {"toronto", {3.0, 1.5, 2.0, 5.0}, 0.87604665700617643124},
    {"toronto", {1.8, 0.9, 0.7, 3.0}, 0.57106698222419455399},
    {"toronto", {2.7, 1.3, 1.2, 4.0}, 0.75220592377400122044},
    {"toronto", {2.0, 0.5, 1.0, 1.0}, 0.22073308707412123707},
    {"toronto", {4.0, 2.0, 1.5, 2.5}, 0.5756807680817603086},
    {"toronto", {3.0, 1.0, 0.8, 1.5}, 0.50098632566870034267},
    {"toronto", {2.7, 2.7, 2.7, 4.0}, 0.75400378616106124019},
    {"toronto", {1.5, 0.25, 0.4, 2.0}, 0.95436190406595249997},
    {"toronto", {5.0, 2.0, 1.1, 3.3}, 0.9869998229187154964},
    {"rice_ie", {0.4, 0.4}, 0.33031464874328444683},
    {"rice_ie", {0.9, 1.2}, 0.74956154833345041805},
    {"rice_ie", {0.6, 0.4}, 0.33110967347177570597},
    {"rice_ie", {0.3, 4.5}, 1.0275404464611309138},
    {"rice_ie", {0.95, 3.0}, 1.275356818681154732},
    {"rice_ie", {0.1, 0.05}, 0.04877067583684778876},
    {"rice_ie", {0.75, 2.0}, 0.96210565778482535661},
    {"ilhi", {0.0, 0.0, 1.7, 3.2}, 0.6973636979316481838},
    {"ilhi", {0.5, 0.5, 2.7, 3.2}, 0.1258321142194305365},
    {"ilhi", {-0.5, 0.5, 1.7, 3.2}, 0.52449393227329020115},
    {"ilhi", {1.1, 0.8, 1.4, 1.7}, 0.22887778114141561889},
    {"ilhi", {2.2, 0.9, 1.9, 2.1}, 0.19578184174224898815},
    {"ilhi", {1.1, 1.4, 1.2, 1.9}, 0.18638918681137098307},
    {"ilhi", {2.0, 1.0, 1.5, 2.0}, 0.27079059575068633599},
    {"ilhi", {1.0, 2.0, 3.0, 4.0}, 0.011173236804043436213},
    {"outage", {0.0, 2.0, 0.5, 1.0, 1.0, 1.0}, 0.60352674807100428511},
    {"outage", {1.0, 2.0, 0.3, 1.5, 2.0, 1.0}, 0.20209283964559113929},
    {"outage", {2.0, 2.0, 1.0, 1.0, 1.0, 0.5}, 0.34574583872316448023},
    {"outage", {2.0, 2.0, 2.0, 1.5, 3.0, 0.8}, 0.075404474350043780704},
    {"outage", {0.0, 2.0, 3.0, 0.75, 1.5, 0.4}, 0.17412986709140600444},
    {"outage", {1.0, 2.0, -0.6, 2.0, 1.0, 1.3}, 0.75298974949901725199},
    {"outage", {3.0, 2.5, 0.5, 1.2, 1.0, 0.7}, 0.35250594100810621786},
    {"outage", {4.0, 3.0, -0.4, 0.8, 1.0, 0.5}, 0.21801447680967228054},
    {"outage", {5.0, 1.5, 2.0, 1.3, 2.0, 1.0}, 0.30802315164557035009},
    {"outage", {6.0, 0.0, 1.0, 0.0, 2.0, 1.0}, 0.34574583872316448023},
    {"outage", {6.0, 0.0, 0.0, 0.0, 1.0, 0.3}, 0.25918177931828212571},
    {"aem_snr_pdf", {2.0, 0.5, 1.0, 1.0}, 0.52002927534169765786},
    {"tifr_rician", {0.0, 1.0, 0.1, 0.1}, 0.57089439734908983516},
    {"tifr_rician_outage", {0.0, 1.0, 0.1, 0.1}, 0.095162581964040431859},
    {"tifr_rician", {1.0, 2.0, 0.2, 0.2}, 1.0260328888098445505},
    {"tifr_rician_outage", {1.0, 2.0, 0.2, 0.2}, 0.073346387359634968673},
    {"tifr_rician", {2.0, 10.0, 0.6, 0.4}, 2.8511583826681021576},
    {"tifr_rician_outage", {2.0, 10.0, 0.6, 0.4}, 0.0047836880323075186682},
    {"cutoff_rician", {0.0, 1.0}, 0.393773845045118357},
    {"cutoff_rician", {1.0, 5.0}, 0.69172787641834555564},
    {"cutoff_rician", {2.0, 10.0}, 0.85658163078086298627},
    {"tifr_miso", {1.0, 1.0, 2.0, 5.0, 0.3, 0.3}, 2.3841605409994039326},
    {"tifr_miso_outage", {1.0, 1.0, 2.0, 5.0, 0.3, 0.3}, 0.002544383474979033029},
    {"tifr_miso", {2.0, 0.5, 4.0, 1.0, 0.2, 0.5}, 1.1491475311576300271},
    {"tifr_miso_outage", {2.0, 0.5, 4.0, 1.0, 0.2, 0.5}, 0.031861308213060306966},
    {"cutoff_miso", {2.0, 1.0, 3.0, 5.0}, 0.85567476424486131318},
};

}  // namespace expected
