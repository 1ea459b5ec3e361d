"""Source tables for the bundled test cases.

Standard published test-system data (IEEE 30/39/118 bus systems and the
single-area 24-bus reliability test system), transcribed in MATPOWER column
conventions: bus (id type Pd Qd Gs Bs), gen (bus Pg Pmax Vg), branch
(from to r x b rateA tap shift). MW/MVAr at 100 MVA base. The 73-bus
three-area system and a synthetic 354-bus three-area composite are built
from these tables in make_cases.py.
"""

from io import StringIO

import numpy as np


def _table(text: str) -> np.ndarray:
    return np.loadtxt(StringIO(text), ndmin=2)


# ---------------------------------------------------------------------------
# IEEE 30-bus system (original parameters)
# ---------------------------------------------------------------------------

CASE30_BUS = _table("""
1   3   0     0     0  0
2   2   21.7  12.7  0  0
3   1   2.4   1.2   0  0
4   1   7.6   1.6   0  0
5   2   94.2  19    0  0
6   1   0     0     0  0
7   1   22.8  10.9  0  0
8   2   30    30    0  0
9   1   0     0     0  0
10  1   5.8   2     0  19
11  2   0     0     0  0
12  1   11.2  7.5   0  0
13  2   0     0     0  0
14  1   6.2   1.6   0  0
15  1   8.2   2.5   0  0
16  1   3.5   1.8   0  0
17  1   9     5.8   0  0
18  1   3.2   0.9   0  0
19  1   9.5   3.4   0  0
20  1   2.2   0.7   0  0
21  1   17.5  11.2  0  0
22  1   0     0     0  0
23  1   3.2   1.6   0  0
24  1   8.7   6.7   0  4.3
25  1   0     0     0  0
26  1   3.5   2.3   0  0
27  1   0     0     0  0
28  1   0     0     0  0
29  1   2.4   0.9   0  0
30  1   10.6  1.9   0  0
""")

CASE30_GEN = _table("""
1   43.6  45  1.0
2   0     20  1.0
5   80    80  1.0
8   75.8  85  1.0
11  31.5  60  1.0
13  52.5  80  1.0
""")

CASE30_BRANCH = _table("""
1   2   0.0192  0.0575  0.0528  130  0      0
1   3   0.0452  0.1652  0.0408  130  0      0
2   4   0.057   0.1737  0.0368  65   0      0
3   4   0.0132  0.0379  0.0084  130  0      0
2   5   0.0472  0.1983  0.0418  130  0      0
2   6   0.0581  0.1763  0.0374  65   0      0
4   6   0.0119  0.0414  0.009   90   0      0
5   7   0.046   0.116   0.0204  70   0      0
6   7   0.0267  0.082   0.017   130  0      0
6   8   0.012   0.042   0.009   32   0      0
6   9   0       0.208   0       65   0.978  0
6   10  0       0.556   0       32   0.969  0
9   11  0       0.208   0       65   0      0
9   10  0       0.11    0       65   0      0
4   12  0       0.256   0       65   0.932  0
12  13  0       0.14    0       65   0      0
12  14  0.1231  0.2559  0       32   0      0
12  15  0.0662  0.1304  0       32   0      0
12  16  0.0945  0.1987  0       32   0      0
14  15  0.221   0.1997  0       16   0      0
16  17  0.0524  0.1923  0       16   0      0
15  18  0.1073  0.2185  0       16   0      0
18  19  0.0639  0.1292  0       16   0      0
19  20  0.034   0.068   0       32   0      0
10  20  0.0936  0.209   0       32   0      0
10  17  0.0324  0.0845  0       32   0      0
10  21  0.0348  0.0749  0       32   0      0
10  22  0.0727  0.1499  0       32   0      0
21  22  0.0116  0.0236  0       32   0      0
15  23  0.1     0.202   0       16   0      0
22  24  0.115   0.179   0       16   0      0
23  24  0.132   0.27    0       16   0      0
24  25  0.1885  0.3292  0       16   0      0
25  26  0.2544  0.38    0       16   0      0
25  27  0.1093  0.2087  0       16   0      0
28  27  0       0.396   0       65   0.968  0
27  29  0.2198  0.4153  0       16   0      0
27  30  0.3202  0.6027  0       16   0      0
29  30  0.2399  0.4533  0       16   0      0
8   28  0.0636  0.2     0.0428  32   0      0
6   28  0.0169  0.0599  0.013   32   0      0
""")


# ---------------------------------------------------------------------------
# 39-bus New England system
# ---------------------------------------------------------------------------

CASE39_BUS = _table("""
1   1   0      0      0  0
2   1   0      0      0  0
3   1   322    2.4    0  0
4   1   500    184    0  0
5   1   0      0      0  0
6   1   0      0      0  0
7   1   233.8  84     0  0
8   1   522    176    0  0
9   1   0      0      0  0
10  1   0      0      0  0
11  1   0      0      0  0
12  1   8.5    88     0  0
13  1   0      0      0  0
14  1   0      0      0  0
15  1   320    153    0  0
16  1   329    32.3   0  0
17  1   0      0      0  0
18  1   158    30     0  0
19  1   0      0      0  0
20  1   680    103    0  0
21  1   274    115    0  0
22  1   0      0      0  0
23  1   247.5  84.6   0  0
24  1   308.6  -92.2  0  0
25  1   224    47.2   0  0
26  1   139    17     0  0
27  1   281    75.5   0  0
28  1   206    27.6   0  0
29  1   283.5  26.9   0  0
30  2   0      0      0  0
31  3   9.2    4.6    0  0
32  2   0      0      0  0
33  2   0      0      0  0
34  2   0      0      0  0
35  2   0      0      0  0
36  2   0      0      0  0
37  2   0      0      0  0
38  2   0      0      0  0
39  2   1104   250    0  0
""")

CASE39_GEN = _table("""
30  250    1040  1.0475
31  520    646   0.982
32  650    725   0.9831
33  632    652   0.9972
34  508    508   1.0123
35  650    687   1.0493
36  560    580   1.0635
37  540    564   1.0278
38  830    865   1.0265
39  1000   1100  1.03
""")

CASE39_BRANCH = _table("""
1   2    0.0035  0.0411  0.6987  600   0      0
1   39   0.001   0.025   0.75    1000  0      0
2   3    0.0013  0.0151  0.2572  500   0      0
2   25   0.007   0.0086  0.146   500   0      0
2   30   0       0.0181  0       900   1.025  0
3   4    0.0013  0.0213  0.2214  500   0      0
3   18   0.0011  0.0133  0.2138  500   0      0
4   5    0.0008  0.0128  0.1342  600   0      0
4   14   0.0008  0.0129  0.1382  500   0      0
5   6    0.0002  0.0026  0.0434  1200  0      0
5   8    0.0008  0.0112  0.1476  900   0      0
6   7    0.0006  0.0092  0.113   900   0      0
6   11   0.0007  0.0082  0.1389  480   0      0
6   31   0       0.025   0       1800  1.07   0
7   8    0.0004  0.0046  0.078   900   0      0
8   9    0.0023  0.0363  0.3804  900   0      0
9   39   0.001   0.025   1.2     900   0      0
10  11   0.0004  0.0043  0.0729  600   0      0
10  13   0.0004  0.0043  0.0729  600   0      0
10  32   0       0.02    0       900   1.07   0
12  11   0.0016  0.0435  0       500   1.006  0
12  13   0.0016  0.0435  0       500   1.006  0
13  14   0.0009  0.0101  0.1723  600   0      0
14  15   0.0018  0.0217  0.366   600   0      0
15  16   0.0009  0.0094  0.171   600   0      0
16  17   0.0007  0.0089  0.1342  600   0      0
16  19   0.0016  0.0195  0.304   600   0      0
16  21   0.0008  0.0135  0.2548  600   0      0
16  24   0.0003  0.0059  0.068   600   0      0
17  18   0.0007  0.0082  0.1319  600   0      0
17  27   0.0013  0.0173  0.3216  600   0      0
19  20   0.0007  0.0138  0       900   1.06   0
19  33   0.0007  0.0142  0       900   1.07   0
20  34   0.0009  0.018   0       900   1.009  0
21  22   0.0008  0.014   0.2565  900   0      0
22  23   0.0006  0.0096  0.1846  600   0      0
22  35   0       0.0143  0       900   1.025  0
23  24   0.0022  0.035   0.361   600   0      0
23  36   0.0005  0.0272  0       900   1.0    0
25  26   0.0032  0.0323  0.531   600   0      0
25  37   0.0006  0.0232  0       900   1.025  0
26  27   0.0014  0.0147  0.2396  600   0      0
26  28   0.0043  0.0474  0.7802  600   0      0
26  29   0.0057  0.0625  1.029   600   0      0
28  29   0.0014  0.0151  0.249   600   0      0
29  38   0.0008  0.0156  0       1200  1.025  0
""")


# ---------------------------------------------------------------------------
# Single-area 24-bus reliability test system (areas of the 73-bus system)
# ---------------------------------------------------------------------------

RTS24_BUS = _table("""
1   2   108  22   0  0
2   2   97   20   0  0
3   1   180  37   0  0
4   1   74   15   0  0
5   1   71   14   0  0
6   1   136  28   0  -100
7   2   125  25   0  0
8   1   171  35   0  0
9   1   175  36   0  0
10  1   195  40   0  0
11  1   0    0    0  0
12  1   0    0    0  0
13  3   265  54   0  0
14  2   194  39   0  0
15  2   317  64   0  0
16  2   100  20   0  0
17  1   0    0    0  0
18  2   333  68   0  0
19  1   181  37   0  0
20  1   128  26   0  0
21  2   0    0    0  0
22  2   0    0    0  0
23  2   0    0    0  0
24  1   0    0    0  0
""")

RTS24_GEN = _table("""
1   172    192  1.035
2   172    192  1.035
7   240    300  1.025
13  285.3  591  1.02
14  0      0    0.98
15  215    215  1.014
16  155    155  1.017
18  400    400  1.05
21  400    400  1.05
22  300    300  1.05
23  660    660  1.05
""")

RTS24_BRANCH = _table("""
1   2   0.0026  0.0139  0.4611  175  0     0
1   3   0.0546  0.2112  0.0572  175  0     0
1   5   0.0218  0.0845  0.0229  175  0     0
2   4   0.0328  0.1267  0.0343  175  0     0
2   6   0.0497  0.192   0.052   175  0     0
3   9   0.0308  0.119   0.0322  175  0     0
3   24  0.0023  0.0839  0       400  1.03  0
4   9   0.0268  0.1037  0.0281  175  0     0
5   10  0.0228  0.0883  0.0239  175  0     0
6   10  0.0139  0.0605  2.459   175  0     0
7   8   0.0159  0.0614  0.0166  175  0     0
8   9   0.0427  0.1651  0.0447  175  0     0
8   10  0.0427  0.1651  0.0447  175  0     0
9   11  0.0023  0.0839  0       400  1.03  0
9   12  0.0023  0.0839  0       400  1.03  0
10  11  0.0023  0.0839  0       400  1.02  0
10  12  0.0023  0.0839  0       400  1.02  0
11  13  0.0061  0.0476  0.0999  500  0     0
11  14  0.0054  0.0418  0.0879  500  0     0
12  13  0.0061  0.0476  0.0999  500  0     0
12  23  0.0124  0.0966  0.203   500  0     0
13  23  0.0111  0.0865  0.1818  500  0     0
14  16  0.005   0.0389  0.0818  500  0     0
15  16  0.0022  0.0173  0.0364  500  0     0
15  21  0.0063  0.049   0.103   500  0     0
15  21  0.0063  0.049   0.103   500  0     0
15  24  0.0067  0.0519  0.1091  500  0     0
16  17  0.0033  0.0259  0.0545  500  0     0
16  19  0.003   0.0231  0.0485  500  0     0
17  18  0.0018  0.0144  0.0303  500  0     0
17  22  0.0135  0.1053  0.2212  500  0     0
18  21  0.0033  0.0259  0.0545  500  0     0
18  21  0.0033  0.0259  0.0545  500  0     0
19  20  0.0051  0.0396  0.0833  500  0     0
19  20  0.0051  0.0396  0.0833  500  0     0
20  23  0.0028  0.0216  0.0455  500  0     0
20  23  0.0028  0.0216  0.0455  500  0     0
21  22  0.0087  0.0678  0.1424  500  0     0
""")

# inter-area ties of the three-area 73-bus system; bus 325 sits on the
# 323-121 corridor. Offsets 100/200/300 give the area bus numbers.
RTS73_TIES = _table("""
107  203  0.042   0.161   0.044  175  0  0
113  215  0.01    0.075   0.158  500  0  0
123  217  0.01    0.074   0.155  500  0  0
223  318  0.01    0.074   0.155  500  0  0
323  325  0.005   0.037   0.08   500  0  0
325  121  0.005   0.037   0.08   500  0  0
""")


# ---------------------------------------------------------------------------
# IEEE 118-bus system
# ---------------------------------------------------------------------------

CASE118_BUS = _table("""
1    2  51   27   0  0
2    1  20   9    0  0
3    1  39   10   0  0
4    2  39   12   0  0
5    1  0    0    0  -40
6    2  52   22   0  0
7    1  19   2    0  0
8    2  28   0    0  0
9    1  0    0    0  0
10   2  0    0    0  0
11   1  70   23   0  0
12   2  47   10   0  0
13   1  34   16   0  0
14   1  14   1    0  0
15   2  90   30   0  0
16   1  25   10   0  0
17   1  11   3    0  0
18   2  60   34   0  0
19   2  45   25   0  0
20   1  18   3    0  0
21   1  14   8    0  0
22   1  10   5    0  0
23   1  7    3    0  0
24   2  13   0    0  0
25   2  0    0    0  0
26   2  0    0    0  0
27   2  71   13   0  0
28   1  17   7    0  0
29   1  24   4    0  0
30   1  0    0    0  0
31   2  43   27   0  0
32   2  59   23   0  0
33   1  23   9    0  0
34   2  59   26   0  14
35   1  33   9    0  0
36   2  31   17   0  0
37   1  0    0    0  -25
38   1  0    0    0  0
39   1  27   11   0  0
40   2  66   23   0  0
41   1  37   10   0  0
42   2  96   23   0  0
43   1  18   7    0  0
44   1  16   8    0  10
45   1  53   22   0  10
46   2  28   10   0  10
47   1  34   0    0  0
48   1  20   11   0  15
49   2  87   30   0  0
50   1  17   4    0  0
51   1  17   8    0  0
52   1  18   5    0  0
53   1  23   11   0  0
54   2  113  32   0  0
55   2  63   22   0  0
56   2  84   18   0  0
57   1  12   3    0  0
58   1  12   3    0  0
59   2  277  113  0  0
60   1  78   3    0  0
61   2  0    0    0  0
62   2  77   14   0  0
63   1  0    0    0  0
64   1  0    0    0  0
65   2  0    0    0  0
66   2  39   18   0  0
67   1  28   7    0  0
68   1  0    0    0  0
69   3  0    0    0  0
70   2  66   20   0  0
71   1  0    0    0  0
72   2  12   0    0  0
73   2  6    0    0  0
74   2  68   27   0  12
75   1  47   11   0  0
76   2  68   36   0  0
77   2  61   28   0  0
78   1  71   26   0  0
79   1  39   32   0  20
80   2  130  26   0  0
81   1  0    0    0  0
82   1  54   27   0  20
83   1  20   10   0  10
84   1  11   7    0  0
85   2  24   15   0  0
86   1  21   10   0  0
87   2  0    0    0  0
88   1  48   10   0  0
89   2  0    0    0  0
90   2  163  42   0  0
91   2  10   0    0  0
92   2  65   10   0  0
93   1  12   7    0  0
94   1  30   16   0  0
95   1  42   31   0  0
96   1  38   15   0  0
97   1  15   9    0  0
98   1  34   8    0  0
99   2  42   0    0  0
100  2  37   18   0  0
101  1  22   15   0  0
102  1  5    3    0  0
103  2  23   16   0  0
104  2  38   25   0  0
105  2  31   26   0  20
106  1  43   16   0  0
107  2  50   12   0  6
108  1  2    1    0  0
109  1  8    3    0  0
110  2  39   30   0  6
111  2  0    0    0  0
112  2  68   13   0  0
113  2  6    0    0  0
114  1  8    3    0  0
115  1  22   7    0  0
116  2  184  0    0  0
117  1  20   8    0  0
118  1  33   15   0  0
""")

CASE118_GEN = _table("""
1    0      100    1.0
4    0      100    1.0
6    0      100    1.0
8    0      100    1.0
10   450    550    1.02
12   85     185    1.0
15   0      100    1.0
18   0      100    1.0
19   0      100    1.0
24   0      100    1.0
25   220    320    1.02
26   314    414    1.02
27   0      100    1.0
31   7      107    1.0
32   0      100    1.0
34   0      100    1.0
36   0      100    1.0
40   0      100    1.0
42   0      100    1.0
46   19     119    1.0
49   204    304    1.02
54   48     148    1.0
55   0      100    1.0
56   0      100    1.0
59   155    255    1.0
61   160    260    1.0
62   0      100    1.0
65   391    491    1.02
66   392    492    1.02
69   516.4  805.2  1.035
70   0      100    1.0
72   0      100    1.0
73   0      100    1.0
74   0      100    1.0
76   0      100    1.0
77   0      100    1.0
80   477    577    1.02
85   0      100    1.0
87   4      104    1.0
89   607    707    1.02
90   0      100    1.0
91   0      100    1.0
92   0      100    1.0
99   0      100    1.0
100  252    352    1.02
103  40     140    1.0
104  0      100    1.0
105  0      100    1.0
107  0      100    1.0
110  0      100    1.0
111  36     136    1.0
112  0      100    1.0
113  0      100    1.0
116  0      100    1.0
""")

CASE118_BRANCH = _table("""
1    2    0.0303   0.0999  0.0254   0  0      0
1    3    0.0129   0.0424  0.01082  0  0      0
4    5    0.00176  0.00798 0.0021   0  0      0
3    5    0.0241   0.108   0.0284   0  0      0
5    6    0.0119   0.054   0.01426  0  0      0
6    7    0.00459  0.0208  0.0055   0  0      0
8    9    0.00244  0.0305  1.162    0  0      0
8    5    0        0.0267  0        0  0.985  0
9    10   0.00258  0.0322  1.23     0  0      0
4    11   0.0209   0.0688  0.01748  0  0      0
5    11   0.0203   0.0682  0.01738  0  0      0
11   12   0.00595  0.0196  0.00502  0  0      0
2    12   0.0187   0.0616  0.01572  0  0      0
3    12   0.0484   0.16    0.0406   0  0      0
7    12   0.00862  0.034   0.00874  0  0      0
11   13   0.02225  0.0731  0.01876  0  0      0
12   14   0.0215   0.0707  0.01816  0  0      0
13   15   0.0744   0.2444  0.06268  0  0      0
14   15   0.0595   0.195   0.0502   0  0      0
12   16   0.0212   0.0834  0.0214   0  0      0
15   17   0.0132   0.0437  0.0444   0  0      0
16   17   0.0454   0.1801  0.0466   0  0      0
17   18   0.0123   0.0505  0.01298  0  0      0
18   19   0.01119  0.0493  0.01142  0  0      0
19   20   0.0252   0.117   0.0298   0  0      0
15   19   0.012    0.0394  0.0101   0  0      0
20   21   0.0183   0.0849  0.0216   0  0      0
21   22   0.0209   0.097   0.0246   0  0      0
22   23   0.0342   0.159   0.0404   0  0      0
23   24   0.0135   0.0492  0.0498   0  0      0
23   25   0.0156   0.08    0.0864   0  0      0
26   25   0        0.0382  0        0  0.96   0
25   27   0.0318   0.163   0.1764   0  0      0
27   28   0.01913  0.0855  0.0216   0  0      0
28   29   0.0237   0.0943  0.0238   0  0      0
30   17   0        0.0388  0        0  0.96   0
8    30   0.00431  0.0504  0.514    0  0      0
26   30   0.00799  0.086   0.908    0  0      0
17   31   0.0474   0.1563  0.0399   0  0      0
29   31   0.0108   0.0331  0.0083   0  0      0
23   32   0.0317   0.1153  0.1173   0  0      0
31   32   0.0298   0.0985  0.0251   0  0      0
27   32   0.0229   0.0755  0.01926  0  0      0
15   33   0.038    0.1244  0.03194  0  0      0
19   34   0.0752   0.247   0.0632   0  0      0
35   36   0.00224  0.0102  0.00268  0  0      0
35   37   0.011    0.0497  0.01318  0  0      0
33   37   0.0415   0.142   0.0366   0  0      0
34   36   0.00871  0.0268  0.00568  0  0      0
34   37   0.00256  0.0094  0.00984  0  0      0
38   37   0        0.0375  0        0  0.935  0
37   39   0.0321   0.106   0.027    0  0      0
37   40   0.0593   0.168   0.042    0  0      0
30   38   0.00464  0.054   0.422    0  0      0
39   40   0.0184   0.0605  0.01552  0  0      0
40   41   0.0145   0.0487  0.01222  0  0      0
40   42   0.0555   0.183   0.0466   0  0      0
41   42   0.041    0.135   0.0344   0  0      0
43   44   0.0608   0.2454  0.06068  0  0      0
34   43   0.0413   0.1681  0.04226  0  0      0
44   45   0.0224   0.0901  0.0224   0  0      0
45   46   0.04     0.1356  0.0332   0  0      0
46   47   0.038    0.127   0.0316   0  0      0
46   48   0.0601   0.189   0.0472   0  0      0
47   49   0.0191   0.0625  0.01604  0  0      0
42   49   0.0715   0.323   0.086    0  0      0
42   49   0.0715   0.323   0.086    0  0      0
45   49   0.0684   0.186   0.0444   0  0      0
48   49   0.0179   0.0505  0.01258  0  0      0
49   50   0.0267   0.0752  0.01874  0  0      0
49   51   0.0486   0.137   0.0342   0  0      0
51   52   0.0203   0.0588  0.01396  0  0      0
52   53   0.0405   0.1635  0.04058  0  0      0
53   54   0.0263   0.122   0.031    0  0      0
49   54   0.073    0.289   0.0738   0  0      0
49   54   0.0869   0.291   0.073    0  0      0
54   55   0.0169   0.0707  0.0202   0  0      0
54   56   0.00275  0.00955 0.00732  0  0      0
55   56   0.00488  0.0151  0.00374  0  0      0
56   57   0.0343   0.0966  0.0242   0  0      0
50   57   0.0474   0.134   0.0332   0  0      0
56   58   0.0343   0.0966  0.0242   0  0      0
51   58   0.0255   0.0719  0.01788  0  0      0
54   59   0.0503   0.2293  0.0598   0  0      0
56   59   0.0825   0.251   0.0569   0  0      0
56   59   0.0803   0.239   0.0536   0  0      0
55   59   0.04739  0.2158  0.05646  0  0      0
59   60   0.0317   0.145   0.0376   0  0      0
59   61   0.0328   0.15    0.0388   0  0      0
60   61   0.00264  0.0135  0.01456  0  0      0
60   62   0.0123   0.0561  0.01468  0  0      0
61   62   0.00824  0.0376  0.0098   0  0      0
63   59   0        0.0386  0        0  0.96   0
63   64   0.00172  0.02    0.216    0  0      0
64   61   0        0.0268  0        0  0.985  0
38   65   0.00901  0.0986  1.046    0  0      0
64   65   0.00269  0.0302  0.38     0  0      0
49   66   0.018    0.0919  0.0248   0  0      0
49   66   0.018    0.0919  0.0248   0  0      0
62   66   0.0482   0.218   0.0578   0  0      0
62   67   0.0258   0.117   0.031    0  0      0
65   66   0        0.037   0        0  0.935  0
66   67   0.0224   0.1015  0.02682  0  0      0
65   68   0.00138  0.016   0.638    0  0      0
47   69   0.0844   0.2778  0.07092  0  0      0
49   69   0.0985   0.324   0.0828   0  0      0
68   69   0        0.037   0        0  0.935  0
69   70   0.03     0.127   0.122    0  0      0
24   70   0.00221  0.4115  0.10198  0  0      0
70   71   0.00882  0.0355  0.00878  0  0      0
24   72   0.0488   0.196   0.0488   0  0      0
71   72   0.0446   0.18    0.04444  0  0      0
71   73   0.00866  0.0454  0.01178  0  0      0
70   74   0.0401   0.1323  0.03368  0  0      0
70   75   0.0428   0.141   0.036    0  0      0
69   75   0.0405   0.122   0.124    0  0      0
74   75   0.0123   0.0406  0.01034  0  0      0
76   77   0.0444   0.148   0.0368   0  0      0
69   77   0.0309   0.101   0.1038   0  0      0
75   77   0.0601   0.1999  0.04978  0  0      0
77   78   0.00376  0.0124  0.01264  0  0      0
78   79   0.00546  0.0244  0.00648  0  0      0
77   80   0.017    0.0485  0.0472   0  0      0
77   80   0.0294   0.105   0.0228   0  0      0
79   80   0.0156   0.0704  0.0187   0  0      0
68   81   0.00175  0.0202  0.808    0  0      0
81   80   0        0.037   0        0  0.935  0
77   82   0.0298   0.0853  0.08174  0  0      0
82   83   0.0112   0.03665 0.03796  0  0      0
83   84   0.0625   0.132   0.0258   0  0      0
83   85   0.043    0.148   0.0348   0  0      0
84   85   0.0302   0.0641  0.01234  0  0      0
85   86   0.035    0.123   0.0276   0  0      0
86   87   0.02828  0.2074  0.0445   0  0      0
85   88   0.02     0.102   0.0276   0  0      0
85   89   0.0239   0.173   0.047    0  0      0
88   89   0.0139   0.0712  0.01934  0  0      0
89   90   0.0518   0.188   0.0528   0  0      0
89   90   0.0238   0.0997  0.106    0  0      0
90   91   0.0254   0.0836  0.0214   0  0      0
89   92   0.0099   0.0505  0.0548   0  0      0
89   92   0.0393   0.1581  0.0414   0  0      0
91   92   0.0387   0.1272  0.03268  0  0      0
92   93   0.0258   0.0848  0.0218   0  0      0
92   94   0.0481   0.158   0.0406   0  0      0
93   94   0.0223   0.0732  0.01876  0  0      0
94   95   0.0132   0.0434  0.0111   0  0      0
80   96   0.0356   0.182   0.0494   0  0      0
82   96   0.0162   0.053   0.0544   0  0      0
94   96   0.0269   0.0869  0.023    0  0      0
80   97   0.0183   0.0934  0.0254   0  0      0
80   98   0.0238   0.108   0.0286   0  0      0
80   99   0.0454   0.206   0.0546   0  0      0
92   100  0.0648   0.295   0.0472   0  0      0
94   100  0.0178   0.058   0.0604   0  0      0
95   96   0.0171   0.0547  0.01474  0  0      0
96   97   0.0173   0.0885  0.024    0  0      0
98   100  0.0397   0.179   0.0476   0  0      0
99   100  0.018    0.0813  0.0216   0  0      0
100  101  0.0277   0.1262  0.0328   0  0      0
92   102  0.0123   0.0559  0.01464  0  0      0
101  102  0.0246   0.112   0.0294   0  0      0
100  103  0.016    0.0525  0.0536   0  0      0
100  104  0.0451   0.204   0.0541   0  0      0
103  104  0.0466   0.1584  0.0407   0  0      0
103  105  0.0535   0.1625  0.0408   0  0      0
100  106  0.0605   0.229   0.062    0  0      0
104  105  0.00994  0.0378  0.00986  0  0      0
105  106  0.014    0.0547  0.01434  0  0      0
105  107  0.053    0.183   0.0472   0  0      0
105  108  0.0261   0.0703  0.01844  0  0      0
106  107  0.053    0.183   0.0472   0  0      0
108  109  0.0105   0.0288  0.0076   0  0      0
103  110  0.03906  0.1813  0.0461   0  0      0
109  110  0.0278   0.0762  0.0202   0  0      0
110  111  0.022    0.0755  0.02     0  0      0
110  112  0.0247   0.064   0.062    0  0      0
17   113  0.00913  0.0301  0.00768  0  0      0
32   113  0.0615   0.203   0.0518   0  0      0
32   114  0.0135   0.0612  0.01628  0  0      0
27   115  0.0164   0.0741  0.01972  0  0      0
114  115  0.0023   0.0104  0.00276  0  0      0
68   116  0.00034  0.00405 0.164    0  0      0
12   117  0.0329   0.14    0.0358   0  0      0
75   118  0.0145   0.0481  0.01198  0  0      0
76   118  0.0164   0.0544  0.01356  0  0      0
""")
