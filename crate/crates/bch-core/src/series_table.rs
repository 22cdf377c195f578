// Taylor coefficients of the VBV kernel f around the origin, written as a
// polynomial in sigma = (u+v)/2 and tau = (u-v)/2. Only even tau powers
// occur because f is symmetric. Total degree 20; on the polydisk
// max(|u|,|v|) <= 0.35 the truncation error stays below 1e-15.
pub(crate) const F_SERIES_ST: &[(u32, u32, f64)] = &[
    (0, 0, 0.5),
    (0, 2, -0.041666666666666664),
    (0, 4, 0.004166666666666667),
    (0, 6, -0.00042162698412698415),
    (0, 8, 4.271384479717813e-05),
    (0, 10, -4.327751723585057e-06),
    (0, 12, 4.384921919644142e-07),
    (0, 14, -4.4428539643900096e-08),
    (0, 16, 4.501552131237686e-09),
    (0, 18, -4.5610258911810394e-10),
    (0, 20, 4.6212854179999594e-11),
    (1, 0, 0.16666666666666666),
    (1, 2, -0.019444444444444445),
    (1, 4, 0.00205026455026455),
    (1, 6, -0.0002099867724867725),
    (1, 8, 2.1336045641601196e-05),
    (1, 10, -2.1633474427786596e-06),
    (1, 12, 2.192327134456764e-07),
    (1, 14, -2.2213930853920414e-08),
    (1, 16, 2.2507674795567867e-09),
    (1, 18, -2.280510770721821e-10),
    (2, 0, 0.041666666666666664),
    (2, 2, -0.005555555555555556),
    (2, 4, 0.000603505291005291),
    (2, 6, -6.227954144620812e-05),
    (2, 8, 6.340271097215542e-06),
    (2, 10, -6.431815294249156e-07),
    (2, 12, 6.518781707893811e-08),
    (2, 14, -6.605413295722521e-09),
    (2, 16, 6.692811506602894e-10),
    (2, 18, -6.781268435609146e-11),
    (3, 0, 0.008333333333333333),
    (3, 2, -0.0011904761904761906),
    (3, 4, 0.00013172398589065255),
    (3, 6, -1.3661749772860883e-05),
    (3, 8, 1.3926601641548731e-06),
    (3, 10, -1.4132519368410022e-07),
    (3, 12, 1.4324854720358987e-08),
    (3, 14, -1.451554329429949e-09),
    (3, 16, 1.4707683618728233e-10),
    (4, 0, 0.001388888888888889),
    (4, 2, -0.00020667989417989417),
    (4, 4, 2.3148148148148147e-05),
    (4, 6, -2.4091777563999786e-06),
    (4, 8, 2.458203723084675e-07),
    (4, 10, -2.4951659703506044e-08),
    (4, 12, 2.529283097847329e-09),
    (4, 14, -2.562993015863945e-10),
    (4, 16, 2.5969293958774648e-11),
    (5, 0, 0.0001984126984126984),
    (5, 2, -3.031305114638448e-05),
    (5, 4, 3.4237881460103682e-06),
    (5, 6, -3.572296065682309e-07),
    (5, 8, 3.6475186662576436e-08),
    (5, 10, -3.703040636129844e-09),
    (5, 12, 3.7538494928402103e-10),
    (5, 14, -3.803925426205445e-11),
    (6, 0, 2.48015873015873e-05),
    (6, 2, -3.858024691358025e-06),
    (6, 4, 4.384118967452301e-07),
    (6, 6, -4.58279228120498e-08),
    (6, 8, 4.681737020940063e-09),
    (6, 10, -4.753661282341427e-10),
    (6, 12, 4.819057819926716e-11),
    (6, 14, -4.8833877827814845e-12),
    (7, 0, 2.7557319223985893e-06),
    (7, 2, -4.342365453476565e-07),
    (7, 4, 4.956891530965605e-08),
    (7, 6, -5.188855497497473e-09),
    (7, 8, 5.303017530767427e-10),
    (7, 10, -5.3850654441903506e-11),
    (7, 12, 5.459299993040075e-12),
    (8, 0, 2.755731922398589e-07),
    (8, 2, -4.384118967452301e-08),
    (8, 4, 5.021892422686073e-09),
    (8, 6, -5.26268249069175e-10),
    (8, 8, 5.380167041668062e-11),
    (8, 10, -5.46387226647341e-12),
    (8, 12, 5.539314991053311e-13),
    (9, 0, 2.505210838544172e-08),
    (9, 2, -4.014760959205403e-09),
    (9, 4, 4.6112397302873495e-10),
    (9, 6, -4.8365499146505994e-11),
    (9, 8, 4.945767630410201e-12),
    (9, 10, -5.023056142644322e-13),
    (10, 0, 2.08767569878681e-09),
    (10, 2, -3.3647520420007194e-10),
    (10, 4, 3.872969798344578e-11),
    (10, 6, -4.065054805644251e-12),
    (10, 8, 4.157699407579601e-13),
    (10, 10, -4.222906162511971e-14),
    (11, 0, 1.6059043836821613e-10),
    (11, 2, -2.6000356688187376e-11),
    (11, 4, 2.9979505855504404e-12),
    (11, 6, -3.1484375343751453e-13),
    (11, 8, 3.220731366569245e-14),
    (12, 0, 1.1470745597729725e-11),
    (12, 2, -1.8639961596310803e-12),
    (12, 4, 2.152326720271182e-13),
    (12, 6, -2.2614341229349502e-14),
    (12, 8, 2.3136823690573374e-15),
    (13, 0, 7.647163731819816e-13),
    (13, 2, -1.246412716093181e-13),
    (13, 4, 1.4409129460283126e-14),
    (13, 6, -1.5145541794852158e-15),
    (14, 0, 4.779477332387385e-14),
    (14, 2, -7.809603484293113e-15),
    (14, 4, 9.037218347789013e-16),
    (14, 6, -9.502247702678143e-17),
    (15, 0, 2.8114572543455206e-15),
    (15, 2, -4.603555738109624e-16),
    (15, 4, 5.33166914566778e-17),
    (16, 0, 1.5619206968586225e-16),
    (16, 2, -2.562097985197916e-17),
    (16, 4, 2.96945240708692e-18),
    (17, 0, 8.22063524662433e-18),
    (17, 2, -1.350532933373997e-18),
    (18, 0, 4.110317623312165e-19),
    (18, 2, -6.761561458262436e-20),
    (19, 0, 1.9572941063391263e-20),
    (20, 0, 8.896791392450574e-22),
];
