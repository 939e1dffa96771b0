"""Reference values from an independent symbolic computation.

Produced once with sympy: symbolic integration of the Legendre products for
C_1 and a symbolic nullspace solve for D_1.  Each exact entry is a tuple of
(coefficient, radicand) terms; the decimal tables carry 40 significant digits.
"""

C1_4_EXACT = [[(('1', 1),), (), (), (), ()], [(('1/2', 3),), (('1/2', 1),), (), (), ()], [(), (('1/4', 15),), (('1/4', 1),), (), ()], [(('-1/8', 7),), (('1/8', 21),), (('1/8', 35),), (('1/8', 1),), ()], [(), (('-1/8', 3),), (('3/8', 5),), (('3/16', 7),), (('1/16', 1),)]]

D1_EXACT = {
    3: [[(('3/8', 1),), (('-3/8', 3),), (('7/24', 5),), (('1/24', 7),)], [(), (('1/4', 1),), (('-1/4', 15),), ()], [(), (), (('1/6', 1),), (('-1/6', 35),)], [(), (), (), (('1', 1),)]],
    4: [[(('3/8', 1),), (('-3/8', 3),), (('7/24', 5),), (('1/24', 7),), ()], [(), (('1/8', 1),), (('-1/8', 15),), (('3/16', 21),), (('1/16', 3),)], [(), (), (('1/6', 1),), (('-1/6', 35),), ()], [(), (), (), (('1/8', 1),), (('-3/8', 7),)], [(), (), (), (), (('1', 1),)]],
    5: [[(('5/16', 1),), (('-5/16', 3),), (('9/32', 5),), (('-5/32', 7),), (('-33/160', 1),), (('-1/160', 11),)], [(), (('1/8', 1),), (('-1/8', 15),), (('3/16', 21),), (('1/16', 3),), ()], [(), (), (('1/16', 1),), (('-1/16', 35),), (('33/80', 5),), (('1/80', 55),)], [(), (), (), (('1/8', 1),), (('-3/8', 7),), ()], [(), (), (), (), (('1/10', 1),), (('-3/10', 11),)], [(), (), (), (), (), (('1', 1),)]],
}

C1_6_DECIMAL = [['1.000000000000000000000000000000000000000', '0', '0', '0', '0', '0', '0'], ['0.8660254037844386467637231707529361834714', '0.5000000000000000000000000000000000000000', '0', '0', '0', '0', '0'], ['0', '0.9682458365518542212948163499455999027082', '0.2500000000000000000000000000000000000000', '0', '0', '0', '0'], ['-0.3307189138830738238127019692049075532138', '0.5728219618694800008235058992160010611231', '0.7395099728874520053209160364452021310519', '0.1250000000000000000000000000000000000000', '0', '0', '0'], ['0', '-0.2165063509461096616909307926882340458679', '0.8385254915624211361534401257742285882902', '0.4960783708246107357190529538073613298207', '0.06250000000000000000000000000000000000000', '0', '0'], ['0.2072890493972124905696832960419179177454', '-0.3590351654086267912406632167636830823888', '0.2317562027217394671472311700250222831556', '0.8226529113180114431630989038202790213321', '0.3109335740958187358545249440628768766182', '0.03125000000000000000000000000000000000000', '0'], ['0', '0.09757809372497497196635770501468428845426', '-0.3779183319514945149546849951704892717719', '0.5962120008855910307203884912645165876591', '0.6760408641494979924598539876507179899221', '0.1868478241109593440801537618155565095936', '0.01562500000000000000000000000000000000000']]

D1_5_DECIMAL = [['0.3125000000000000000000000000000000000000', '-0.5412658773652741542273269817205851146696', '0.6288941186718158521150800943306714412177', '-0.4133986423538422797658774615061344415172', '-0.2062500000000000000000000000000000000000', '-0.02072890493972124905696832960419179177454'], ['0', '0.1250000000000000000000000000000000000000', '-0.4841229182759271106474081749727999513541', '0.8592329428042200012352588488240015916846', '0.1082531754730548308454653963441170229339', '0'], ['0', '0', '0.06250000000000000000000000000000000000000', '-0.3697549864437260026604580182226010655260', '0.9223780407186632497687841383516514471193', '0.09270248108869578685889246801000891326225'], ['0', '0', '0', '0.1250000000000000000000000000000000000000', '-0.9921567416492214714381059076147226596413', '0'], ['0', '0', '0', '0', '0.1000000000000000000000000000000000000000', '-0.9949874371066199547344798210012060051781'], ['0', '0', '0', '0', '0', '1.000000000000000000000000000000000000000']]
