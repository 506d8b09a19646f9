"""Published maximum-statistic values for k = 211 (h, Psi(h/211)).

Reference data mirrored by the psi command; six entries exceed
U = 0.068076: h in {1, 2, 105, 106, 209, 210}.
"""

PSI_211 = (
    (1, 0.148849),
    (2, 0.0697363),
    (3, 0.043772),
    (4, 0.0309863),
    (5, 0.023397),
    (6, 0.0184698),
    (7, 0.0156639),
    (8, 0.0124713),
    (9, 0.0104293),
    (10, 0.0112525),
    (11, 0.00767528),
    (12, 0.00659574),
    (13, 0.0058591),
    (14, 0.0096738),
    (15, 0.00971531),
    (16, 0.00396796),
    (17, 0.00342261),
    (18, 0.00301237),
    (19, 0.00470466),
    (20, 0.00252641),
    (21, 0.01113),
    (22, 0.0020895),
    (23, 0.00188677),
    (24, 0.00169337),
    (25, 0.00150855),
    (26, 0.00300304),
    (27, 0.00116221),
    (28, 0.00163458),
    (29, 0.000843381),
    (30, 0.0156784),
    (31, 0.000548606),
    (32, 0.000473552),
    (33, 0.000554153),
    (34, 0.00101775),
    (35, 0.0186021),
    (36, 0.00106814),
    (37, 0.0),
    (38, 0.0),
    (39, 0.0),
    (40, 0.0),
    (41, 0.000381978),
    (42, 0.0229158),
    (43, 0.0027325),
    (44, 0.00196647),
    (45, 0.0),
    (46, 0.0),
    (47, 0.0104684),
    (48, 0.00208189),
    (49, 0.0),
    (50, 0.0),
    (51, 0.00066038),
    (52, 0.00632593),
    (53, 0.0311822),
    (54, 0.00265721),
    (55, 0.00204909),
    (56, 0.0),
    (57, 0.0),
    (58, 0.0),
    (59, 0.0),
    (60, 0.00504905),
    (61, 0.0),
    (62, 0.0032529),
    (63, 0.00070455),
    (64, 0.0),
    (65, 0.00556107),
    (66, 0.00345539),
    (67, 0.000454217),
    (68, 0.00215718),
    (69, 0.00643135),
    (70, 0.0435319),
    (71, 0.01853),
    (72, 0.00460294),
    (73, 0.0030058),
    (74, 0.000302041),
    (75, 0.0),
    (76, 0.00152355),
    (77, 0.000412421),
    (78, 0.0),
    (79, 0.0122548),
    (80, 0.000515716),
    (81, 0.0012993),
    (82, 0.00309704),
    (83, 0.0),
    (84, 0.00892564),
    (85, 0.00442469),
    (86, 0.00144133),
    (87, 0.000185497),
    (88, 0.00653466),
    (89, 0.0),
    (90, 0.00237935),
    (91, 0.00073034),
    (92, 0.0),
    (93, 0.0),
    (94, 0.00278581),
    (95, 0.00237614),
    (96, 0.00739771),
    (97, 3.00997e-05),
    (98, 0.00158219),
    (99, 0.00126458),
    (100, 0.00473862),
    (101, 0.00298033),
    (102, 0.0051156),
    (103, 0.00890871),
    (104, 0.0184042),
    (105, 0.0696573),
    (106, 0.0696573),
    (107, 0.0184042),
    (108, 0.00890871),
    (109, 0.0051156),
    (110, 0.00298033),
    (111, 0.00473862),
    (112, 0.00126458),
    (113, 0.00158219),
    (114, 3.00997e-05),
    (115, 0.00739771),
    (116, 0.00237614),
    (117, 0.00278581),
    (118, 0.0),
    (119, 0.0),
    (120, 0.00073034),
    (121, 0.00237935),
    (122, 0.0),
    (123, 0.00653466),
    (124, 0.000185497),
    (125, 0.00144133),
    (126, 0.00442469),
    (127, 0.00892564),
    (128, 0.0),
    (129, 0.00309704),
    (130, 0.0012993),
    (131, 0.000515716),
    (132, 0.0122548),
    (133, 0.0),
    (134, 0.000412421),
    (135, 0.00152355),
    (136, 0.0),
    (137, 0.000302041),
    (138, 0.0030058),
    (139, 0.00460294),
    (140, 0.01853),
    (141, 0.0435319),
    (142, 0.00643135),
    (143, 0.00215718),
    (144, 0.000454217),
    (145, 0.00345539),
    (146, 0.00556107),
    (147, 0.0),
    (148, 0.00070455),
    (149, 0.0032529),
    (150, 0.0),
    (151, 0.00504905),
    (152, 0.0),
    (153, 0.0),
    (154, 0.0),
    (155, 0.0),
    (156, 0.00204909),
    (157, 0.00265721),
    (158, 0.0311822),
    (159, 0.00632593),
    (160, 0.00066038),
    (161, 0.0),
    (162, 0.0),
    (163, 0.00208189),
    (164, 0.0104684),
    (165, 0.0),
    (166, 0.0),
    (167, 0.00196647),
    (168, 0.0027325),
    (169, 0.0229158),
    (170, 0.000381978),
    (171, 0.0),
    (172, 0.0),
    (173, 0.0),
    (174, 0.0),
    (175, 0.00106814),
    (176, 0.0186021),
    (177, 0.00101775),
    (178, 0.000554153),
    (179, 0.000473552),
    (180, 0.000548606),
    (181, 0.0156784),
    (182, 0.000843381),
    (183, 0.00163458),
    (184, 0.00116221),
    (185, 0.00300304),
    (186, 0.00150855),
    (187, 0.00169337),
    (188, 0.00188677),
    (189, 0.0020895),
    (190, 0.01113),
    (191, 0.00252641),
    (192, 0.00470466),
    (193, 0.00301237),
    (194, 0.00342261),
    (195, 0.00396796),
    (196, 0.00971531),
    (197, 0.0096738),
    (198, 0.0058591),
    (199, 0.00659574),
    (200, 0.00767528),
    (201, 0.0112525),
    (202, 0.0104293),
    (203, 0.0124713),
    (204, 0.0156639),
    (205, 0.0184698),
    (206, 0.023397),
    (207, 0.0309863),
    (208, 0.043772),
    (209, 0.0697363),
    (210, 0.148849),
)
