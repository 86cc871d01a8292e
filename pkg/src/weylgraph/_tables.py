"""Adjacency tables of the four exceptional graphs locally like W(F4)."""

G24A = {
    "x1": ["x2", "x3", "y12", "y21", "y13", "y31", "y14", "y41"],
    "x2": ["x3", "x4", "y12", "y21", "y23", "y32", "y24", "y42"],
    "x3": ["x4", "x1", "y13", "y31", "y23", "y32", "y34", "y43"],
    "x4": ["x1", "x2", "y14", "y41", "y24", "y42", "y34", "y43"],
    "y12": ["y21", "y34", "y43"],
    "y21": ["y12", "y34", "y43"],
    "y34": ["y12", "y21", "y43"],
    "y13": ["y31", "y24", "y42"],
    "y31": ["y13", "y24", "y42"],
    "y24": ["y13", "y31", "y42"],
    "y14": ["y41", "y23", "y32"],
    "y41": ["y14", "y23", "y32"],
    "y23": ["y14", "y41", "y32"],
    "x5": ["x6", "x7", "y12", "y34", "y13", "y24", "y14", "y23"],
    "x6": ["x7", "x8", "y12", "y34", "y42", "y31", "y32", "y41"],
    "x7": ["x8", "x5", "y43", "y21", "y13", "y24", "y32", "y41"],
    "x8": ["x5", "x6", "y43", "y21", "y42", "y31", "y14", "y23"],
    "x09": ["x10", "x11", "y12", "y43", "y13", "y42", "y14", "y32"],
    "x10": ["x11", "x12", "y12", "y43", "y24", "y31", "y23", "y41"],
    "x11": ["x12", "x09", "y34", "y21", "y13", "y42", "y23", "y41"],
    "x12": ["x09", "x10", "y34", "y21", "y24", "y31", "y14", "y32"],
}

G24B = {
    "x1": ["x2", "x3", "y12", "y21", "y13", "y31", "y14", "y41"],
    "x2": ["x3", "x4", "y12", "y21", "y23", "y32", "y24", "y42"],
    "x3": ["x4", "x1", "y13", "y31", "y23", "y32", "y34", "y43"],
    "x4": ["x1", "x2", "y14", "y41", "y24", "y42", "y34", "y43"],
    "y12": ["y21", "y34", "y43"],
    "y21": ["y12", "y34", "y43"],
    "y34": ["y12", "y21", "y43"],
    "y13": ["y31", "y24", "y42"],
    "y31": ["y13", "y24", "y42"],
    "y24": ["y13", "y31", "y42"],
    "y14": ["y41", "y23", "y32"],
    "y41": ["y14", "y23", "y32"],
    "y23": ["y14", "y41", "y32"],
    "x5": ["x6", "x7", "y12", "y34", "y13", "y24", "y14", "y23"],
    "x6": ["x7", "x8", "y12", "y34", "y42", "y31", "y32", "y41"],
    "x7": ["x8", "x5", "y43", "y21", "y13", "y24", "y32", "y41"],
    "x8": ["x5", "x6", "y43", "y21", "y42", "y31", "y14", "y23"],
    "x09": ["x10", "x11", "y12", "y43", "y13", "y42", "y41", "y23"],
    "x10": ["x11", "x12", "y12", "y43", "y24", "y31", "y32", "y14"],
    "x11": ["x12", "x09", "y34", "y21", "y13", "y42", "y32", "y14"],
    "x12": ["x09", "x10", "y34", "y21", "y24", "y31", "y41", "y23"],
}

G32A = {
    "x1": ["x2", "x3", "x4", "y1", "y2", "y3", "y4", "y5", "y6"],
    "x2": ["x3", "y1", "y2", "y31", "y35", "y51", "y53"],
    "x3": ["x4", "y3", "y4", "y13", "y15", "y51", "y53"],
    "x4": ["x2", "y5", "y6", "y13", "y15", "y31", "y35"],
    "y1": ["y2", "y13", "y15", "z13", "z14", "z15", "z16"],
    "y2": ["y1", "y13", "y15", "z23", "z24", "z25", "z26"],
    "y3": ["y4", "y31", "y35", "z13", "z23", "z35", "z36"],
    "y4": ["y3", "y31", "y35", "z14", "z24", "z45", "z46"],
    "y5": ["y6", "y51", "y53", "z15", "z25", "z35", "z45"],
    "y6": ["y5", "y51", "y53", "z16", "z26", "z36", "z46"],
    "z13": ["z14", "z23", "z24"],
    "z14": ["z23", "z24"],
    "z23": ["z24"],
    "z15": ["z16", "z25", "z26"],
    "z16": ["z25", "z26"],
    "z25": ["z26"],
    "z35": ["z36", "z45", "z46"],
    "z36": ["z45", "z46"],
    "z45": ["z46"],
    "y13": ["y15", "z13", "z14", "z25", "z26"],
    "y15": ["y13", "z15", "z16", "z23", "z24"],
    "y31": ["y35", "z13", "z23", "z45", "z46"],
    "y35": ["y31", "z35", "z36", "z14", "z24"],
    "y51": ["y53", "z15", "z25", "z36", "z46"],
    "y53": ["y51", "z35", "z45", "z16", "z26"],
    "w1": ["w2", "w3", "z13", "z24", "z15", "z26", "z35", "z46"],
    "w2": ["w3", "w4", "z13", "z24", "z16", "z25", "z36", "z45"],
    "w3": ["w4", "w1", "z14", "z23", "z15", "z26", "z36", "z45"],
    "w4": ["w1", "w2", "z14", "z23", "z16", "z25", "z35", "z46"],
}

G32B = {
    "x1": ["x2", "x3", "x4", "y1", "y2", "y3", "y4", "y5", "y6"],
    "x2": ["x3", "y1", "y2", "y31", "y35", "y51", "y53"],
    "x3": ["x4", "y3", "y4", "y13", "y15", "y51", "y53"],
    "x4": ["x2", "y5", "y6", "y13", "y15", "y31", "y35"],
    "y1": ["y2", "y13", "y15", "z13", "z14", "z15", "z16"],
    "y2": ["y1", "y13", "y15", "z23", "z24", "z25", "z26"],
    "y3": ["y4", "y31", "y35", "z13", "z23", "z35", "z36"],
    "y4": ["y3", "y31", "y35", "z14", "z24", "z45", "z46"],
    "y5": ["y6", "y51", "y53", "z15", "z25", "z35", "z45"],
    "y6": ["y5", "y51", "y53", "z16", "z26", "z36", "z46"],
    "z13": ["z14", "z23", "z24"],
    "z14": ["z23", "z24"],
    "z23": ["z24"],
    "z15": ["z16", "z25", "z26"],
    "z16": ["z25", "z26"],
    "z25": ["z26"],
    "z35": ["z36", "z45", "z46"],
    "z36": ["z45", "z46"],
    "z45": ["z46"],
    "y13": ["y15", "z13", "z14", "z25", "z26"],
    "y15": ["y13", "z15", "z16", "z23", "z24"],
    "y31": ["y35", "z13", "z23", "z45", "z46"],
    "y35": ["y31", "z35", "z36", "z14", "z24"],
    "y51": ["y53", "z15", "z25", "z36", "z46"],
    "y53": ["y51", "z35", "z45", "z16", "z26"],
    "w1": ["w2", "w3", "z13", "z24", "z15", "z26", "z36", "z45"],
    "w2": ["w3", "w4", "z13", "z24", "z16", "z25", "z35", "z46"],
    "w3": ["w4", "w1", "z14", "z23", "z15", "z26", "z35", "z46"],
    "w4": ["w1", "w2", "z14", "z23", "z16", "z25", "z36", "z45"],
}
