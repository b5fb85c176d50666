"""Expected conjugacy-class / element-order structures for the order-192
catalog (one row per group: ncl and "order:count/classes" entries).

Keys "29".."81" are the numbered catalog entries; remaining keys are the
named rows of the a4-by-16 family and the supplementary groups, identified
by their library number where one is given.  Entries whose printed values
are internally inconsistent or conflict with another table are listed in
SUSPECT with the reason.
"""

ROWS = {
    # numbered entries
    "55": (11, "2:19/3 3:32/1 4:60/3 6:32/1 8:48/2", "184"),
    "45": (11, "2:19/3 3:32/1 4:108/5 6:32/1", "185"),
    "81": (13, "2:19/3 3:32/1 4:60/5 6:32/1 8:48/2", "1492"),
    "80": (13, "2:19/4 3:32/1 4:108/6 6:32/1", "1491"),
    "63": (13, "2:43/4 3:32/1 4:36/4 6:32/1 8:48/2", "1494"),
    "62": (13, "2:43/6 3:32/1 4:84/4 6:32/1", "1493"),
    "44": (14, "2:43/5 3:32/1 4:36/4 6:32/1 8:48/2", "956"),
    "54": (14, "2:43/6 3:32/1 4:84/5 6:32/1", "955"),
    "79": (15, "2:7/3 3:32/1 4:72/5 6:32/1 8:48/4", "180"),
    "60": (15, "2:31/4 3:32/1 4:48/4 6:32/1 8:48/4", "181"),
    "76": (17, "2:11/3 3:8/1 4:68/6 6:40/3 8:48/2 12:16/1", "989"),
    "74": (17, "2:19/3 3:8/1 4:60/6 6:8/1 8:48/2 12:48/3", "987"),
    "64": (17, "2:35/4 3:8/1 4:44/5 6:40/3 8:48/2 12:16/1", "990"),
    "41": (17, "2:43/4 3:8/1 4:36/5 6:8/1 8:48/2 12:48/3", "988"),
    "75": (20, "2:7/2 3:8/1 4:56/4 6:8/1 8:64/5 12:16/2 24:32/4", "962"),
    "42": (20, "2:7/3 3:32/1 4:72/10 6:32/1 8:48/4", "182"),
    "56": (20, "2:31/3 3:8/1 4:32/3 6:8/1 8:64/5 12:16/2 24:32/4", "965"),
    "43": (20, "2:31/5 3:32/1 4:48/8 6:32/1 8:48/4", "944"),
    "53": (20, "2:31/9 3:32/1 4:96/8 6:32/1", "1495"),
    "59": (20, "2:55/4 3:8/1 4:8/2 6:8/1 8:64/5 12:16/2 24:32/4", "966"),
    "52": (20, "2:55/11 3:32/1 4:72/6 6:32/1", "1538"),
    "35": (23, "2:3/3 3:8/1 4:76/7 6:24/3 8:48/4 12:32/4", "945"),
    "77": (23, "2:3/3 3:8/1 4:76/7 6:24/3 8:48/4 12:32/4", "948"),
    "73": (23, "2:7/5 3:8/1 4:72/5 6:56/7 8:48/4", "978"),
    "72": (23, "2:15/4 3:8/1 4:64/6 6:24/3 8:48/4 12:32/4", "984"),
    "65": (23, "2:23/5 3:8/1 4:56/7 6:40/3 8:48/5 12:16/1", "1486"),
    "61": (23, "2:31/5 3:8/1 4:48/7 6:8/1 8:48/5 12:48/3", "1483"),
    "33": (23, "2:31/6 3:8/1 4:48/4 6:56/7 8:48/4", "980"),
    "40": (23, "2:39/5 3:8/1 4:40/5 6:24/3 8:48/4 12:32/4", "986"),
    "49": (23, "2:47/7 3:8/1 4:32/5 6:40/3 8:48/5 12:16/1", "1485"),
    "34": (23, "2:51/5 3:8/1 4:28/5 6:24/3 8:48/4 12:32/4", "952"),
    "50": (23, "2:55/7 3:8/1 4:24/5 6:8/1 8:48/5 12:48/3", "1484"),
    "954": (23, "2:27/4 3:8/1 4:52/6 6:24/3 8:48/4 12:32/4", "954"),
    "70": (26, "2:3/3 3:8/1 4:76/10 6:24/3 8:48/4 12:32/4", "947"),
    "78": (26, "2:7/5 3:8/1 4:72/8 6:56/7 8:48/4", "979"),
    "48": (26, "2:15/4 3:8/1 4:64/9 6:24/3 8:48/4 12:32/4", "982"),
    "38": (26, "2:15/5 3:8/1 4:64/8 6:24/3 8:48/4 12:32/4", "985"),
    "68": (26, "2:15/5 3:8/1 4:64/8 6:24/3 8:48/4 12:32/4", "1479"),
    "57": (26, "2:19/3 3:8/1 4:44/6 6:8/1 8:64/8 12:16/2", "964"),
    "37": (26, "2:27/5 3:8/1 4:52/8 6:24/3 8:48/4 12:32/4", "953"),
    "66": (26, "2:31/7 3:8/1 4:48/6 6:56/7 8:48/4", "1476"),
    "51": (26, "2:39/6 3:8/1 4:40/7 6:24/3 8:48/4 12:32/4", "1482"),
    "39": (26, "2:63/9 3:8/1 4:16/4 6:24/3 8:48/4 12:32/4", "1481"),
    "29": (32, "2:3/3 3:8/1 4:28/8 6:24/3 8:96/12 12:32/4", "183"),
    "69": (32, "2:3/3 3:8/1 4:76/12 6:24/3 8:48/8 12:32/4", "946"),
    "71": (32, "2:7/2 3:8/1 4:8/3 6:8/1 8:16/6 12:16/2 16:96/12 24:32/4",
           "187"),
    "31": (32, "2:7/7 3:8/1 4:72/8 6:56/7 8:48/8", "977"),
    "67": (32, "2:7/7 3:8/1 4:72/8 6:56/8 8:48/8", "1474"),
    "46": (32, "2:15/5 3:8/1 4:64/10 6:24/3 8:48/8 12:32/4", "983"),
    "36": (32, "2:15/5 3:8/1 4:64/14 6:24/3 8:48/4 12:32/4", "981"),
    "58": (32, "2:19/3 3:8/1 4:44/8 6:8/1 8:64/12 12:16/2 24:32/4", "963"),
    "30": (32, "2:27/5 3:8/1 4:52/10 6:24/3 8:48/8 12:32/4", "951"),
    "47": (32, "2:39/7 3:8/1 4:40/8 6:24/3 8:48/8 12:32/4", "1480"),
    "32": (32, "2:55/11 3:8/1 4:24/4 6:56/7 8:48/4", "1475"),
    # named rows: the a4-by-16 family (28 groups)
    "a16.975": (19, "2:7/3 3:8/1 4:72/6 6:8/1 8:48/4 12:48/3", "975"),
    "a16.973": (19, "2:23/5 3:8/1 4:56/4 6:40/3 8:48/4 12:16/1", "973"),
    "a16.976": (19, "2:31/4 3:8/1 4:48/5 6:8/1 8:48/4 12:48/3", "976"),
    "a16.974": (19, "2:47/6 3:8/1 4:32/3 6:40/3 8:48/4 12:16/1", "974"),
    "a16.957": (22, "2:7/3 3:8/1 4:104/6 6:8/1 8:16/4 12:16/2 24:32/4", "957"),
    "a16.960": (22, "2:31/4 3:8/1 4:80/5 6:8/1 8:16/4 12:16/2 24:32/4", "960"),
    "a16.961": (22, "2:55/5 3:8/1 4:56/4 6:8/1 8:16/4 12:16/2 24:32/4", "961"),
    "a16.66": (25, "2:19/5 3:8/1 4:108/14 6:8/1 12:48/3", "66"),
    "a16.62": (25, "2:35/8 3:8/1 4:92/11 6:40/3 12:16/1", "62"),
    "a16.67": (25, "2:43/6 3:8/1 4:84/13 6:8/1 12:48/3", "67"),
    "a16.61": (25, "2:59/11 3:8/1 4:68/8 6:40/3 12:16/1", "61"),
    "a16.968": (28, "2:15/5 3:8/1 4:16/6 6:24/3 8:96/8 12:32/4", "968"),
    "a16.q2xc2b": (28, "2:15/7 3:8/1 4:112/12 6:24/3 12:32/4", ""),
    "a16.c4ac4a": (28, "2:15/7 3:8/1 4:112/12 6:24/3 12:32/4", ""),
    "a16.c4ac4b": (28, "2:15/7 3:8/1 4:112/12 6:24/3 12:32/4", ""),
    "a16.959": (28, "2:19/4 3:8/1 4:44/7 6:8/1 8:64/8 12:16/2 24:32/4", "959"),
    "a16.991": (28, "2:31/11 3:8/1 4:96/8 6:56/7", "991"),
    "a16.1471": (28, "2:39/7 3:8/1 4:88/12 6:24/3 12:32/4", "1471"),
    "a16.972": (28, "2:39/9 3:8/1 4:88/10 6:24/3 12:32/4", "972"),
    "a16.1488": (28, "2:55/13 3:8/1 4:72/6 6:56/7", "1488"),
    "a16.1470": (28, "2:63/11 3:8/1 4:64/8 6:24/3 12:32/4", "1470"),
    "a16.186": (40, "2:7/3 3:8/1 4:8/4 6:8/1 8:16/8 12:16/2 16:96/16 24:32/4",
                "186"),
    "a16.967": (40, "2:15/7 3:8/1 4:16/8 6:24/3 8:96/16 12:32/4", "967"),
    "a16.969": (40, "2:15/7 3:8/1 4:112/24 6:24/3 12:32/4", "969"),
    "a16.958": (40, "2:19/5 3:8/1 4:44/10 6:8/1 8:64/16 12:16/2 24:32/4",
                "958"),
    "a16.1487": (40, "2:31/15 3:8/1 4:96/16 6:56/7", "1487"),
    "a16.1469": (40, "2:39/11 3:8/1 4:88/20 6:24/3 12:32/4", "1469"),
    "a16.1537": (40, "2:79/23 3:8/1 4:48/8 6:56/7", "1537"),
}

# rows kept as printed but known or believed wrong; reason recorded here and
# surfaced by the verification report
SUSPECT = {
    "32": "row reads 8:48/4, but then class counts sum to 27, not ncl-1=31",
    "57": "row is missing its last column: element counts sum to 159, "
          "not 191",
    "67": "row reads 6:56/8, making the class count exceed the stated ncl; "
          "the matching row of the equal-structure pair reads 6:56/7",
    "77": "the missed-group table lists this library number with the 6- and "
          "8-column values swapped relative to this row",
}

# structures for the five supplementary (missed) groups as printed in their
# own table; 949/950 disagree with the 945 row above in the 6/8 columns
T8_SUSPECT = {
    "949": "6- and 8-column values appear swapped relative to the "
           "equal-row quadruple (cf. the class-structure table)",
    "950": "6- and 8-column values appear swapped relative to the "
           "equal-row quadruple (cf. the class-structure table)",
}
T8_ROWS = {
    "954": "2:27/4 3:8/1 4:52/6 6:24/3 8:48/4 12:32/4",
    "949": "2:3/3 3:8/1 4:76/7 6:48/4 8:24/3 12:32/4",
    "950": "2:3/3 3:8/1 4:76/7 6:48/4 8:24/3 12:32/4",
    "1490": "2:31/4 3:32/1 4:48/4 6:32/1 8:48/4",
    "1489": "2:7/3 3:32/1 4:72/5 6:32/1 8:48/4",
}

TOWER_ROWS = {
    "g10752": (48, "2:511/29 3:896/2 6:6272/14 7:3072/2"),
    "g1536": (33, "2:159/10 3:128/1 4:480/13 6:384/3 8:384/5"),
    "g6144": (72, "2:431/17 3:128/1 4:1744/28 6:1408/7 8:1920/16 12:512/2"),
    "g12288": (78, "2:559/18 3:128/1 4:4560/34 6:2432/10 8:3072/11 "
                   "12:1536/3"),
    "g9216": (50, "2:495/18 3:800/3 4:3600/18 6:3168/7 12:1152/3"),
    "g18432": (88, "2:943/26 3:800/3 4:7248/41 6:6752/12 12:2688/5"),
    "g36864": (98, "2:1167/23 3:800/3 4:12144/41 6:13152/19 8:3072/5 "
                   "12:4992/5 24:1536/1"),
}
