#include "pierce/families.hpp"

namespace pierce::families {

// 48-gon approximations of the four smooth regions: two elongated regions
// crossed near the top, a low horizontal one, and a central disk. The
// coordinates were produced once by sampling each region's boundary and
// are kept fixed; the certification test re-checks that the family is
// non-piercing and that its dyadic dual VC-dimension is exactly 4.
geom::RegionFamily fig1_family() {
    geom::RegionFamily family;
    family.name = "fig1";
    family.regions.push_back({"F1",
        {
            {-429, 39837}, {-1328, 39841}, {-2463, 39398}, {-3815, 38516},
            {-5361, 37210}, {-7075, 35503}, {-8927, 33423}, {-10886, 31007},
            {-12918, 28295}, {-14989, 25334}, {-17062, 22175}, {-19103, 18872},
            {-21077, 15480}, {-22949, 12059}, {-24688, 8667}, {-26263, 5362},
            {-27649, 2200}, {-28822, -765}, {-29760, -3481}, {-30449, -5903},
            {-30876, -7988}, {-31034, -9702}, {-30920, -11015}, {-30537, -11904},
            {-29891, -12354}, {-28993, -12358}, {-27858, -11915}, {-26506, -11033},
            {-24959, -9727}, {-23245, -8020}, {-21393, -5940}, {-19434, -3524},
            {-17402, -812}, {-15332, 2149}, {-13258, 5308}, {-11217, 8612},
            {-9244, 12003}, {-7372, 15424}, {-5633, 18816}, {-4057, 22122},
            {-2671, 25284}, {-1499, 28248}, {-561, 30965}, {128, 33386},
            {555, 35472}, {713, 37185}, {600, 38498}, {217, 39387},
        },
        {}});
    family.regions.push_back({"F2",
        {
            {30394, -12063}, {30847, -11287}, {31030, -10083}, {30943, -8471},
            {30585, -6479}, {29964, -4141}, {29089, -1497}, {27976, 1408},
            {26643, 4523}, {25114, 7797}, {23415, 11172}, {21574, 14591},
            {19624, 17996}, {17597, 21328}, {15529, 24530}, {13455, 27547},
            {11409, 30329}, {9428, 32826}, {7545, 34997}, {5792, 36804},
            {4199, 38217}, {2794, 39210}, {1601, 39769}, {639, 39881},
            {-74, 39547}, {-526, 38771}, {-710, 37566}, {-622, 35954},
            {-265, 33962}, {357, 31624}, {1232, 28980}, {2345, 26076},
            {3677, 22960}, {5206, 19686}, {6906, 16311}, {8746, 12892},
            {10696, 9487}, {12723, 6156}, {14791, 2953}, {16866, -64},
            {18911, -2845}, {20893, -5343}, {22776, -7514}, {24529, -9321},
            {26121, -10733}, {27526, -11727}, {28720, -12285}, {29681, -12398},
        },
        {}});
    family.regions.push_back({"F3",
        {
            {29965, -9758}, {29519, -9108}, {28568, -8474}, {27128, -7865},
            {25224, -7293}, {22889, -6768}, {20161, -6297}, {17089, -5891},
            {13725, -5554}, {10125, -5293}, {6353, -5113}, {2471, -5017},
            {-1452, -5006}, {-5351, -5080}, {-9158, -5239}, {-12809, -5479},
            {-16240, -5796}, {-19394, -6185}, {-22215, -6640}, {-24657, -7152},
            {-26677, -7713}, {-28240, -8312}, {-29320, -8941}, {-29898, -9588},
            {-29965, -10242}, {-29519, -10892}, {-28568, -11526}, {-27128, -12135},
            {-25224, -12707}, {-22889, -13232}, {-20161, -13703}, {-17089, -14109},
            {-13725, -14446}, {-10125, -14707}, {-6353, -14887}, {-2471, -14983},
            {1452, -14994}, {5351, -14920}, {9158, -14761}, {12809, -14521},
            {16240, -14204}, {19394, -13815}, {22215, -13360}, {24657, -12848},
            {26677, -12287}, {28240, -11688}, {29320, -11059}, {29898, -10412},
        },
        {}});
    family.regions.push_back({"F4",
        {
            {14982, 6726}, {14759, 8676}, {14284, 10579}, {13564, 12404},
            {12612, 14120}, {11444, 15697}, {10081, 17108}, {8545, 18328},
            {6862, 19338}, {5063, 20120}, {3176, 20660}, {1236, 20949},
            {-726, 20982}, {-2676, 20759}, {-4579, 20284}, {-6404, 19564},
            {-8120, 18612}, {-9697, 17444}, {-11108, 16081}, {-12328, 14545},
            {-13338, 12862}, {-14120, 11063}, {-14660, 9176}, {-14949, 7236},
            {-14982, 5274}, {-14759, 3324}, {-14284, 1421}, {-13564, -404},
            {-12612, -2120}, {-11444, -3697}, {-10081, -5108}, {-8545, -6328},
            {-6862, -7338}, {-5063, -8120}, {-3176, -8660}, {-1236, -8949},
            {726, -8982}, {2676, -8759}, {4579, -8284}, {6404, -7564},
            {8120, -6612}, {9697, -5444}, {11108, -4081}, {12328, -2545},
            {13338, -862}, {14120, 937}, {14660, 2824}, {14949, 4764},
        },
        {}});
    return family;
}

} // namespace pierce::families
