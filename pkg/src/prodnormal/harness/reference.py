"""Published reference values of the four relative-error tables.

Each entry maps a parameter tuple to its six table cells as printed, at two
significant figures; ``None`` marks a not-applicable cell.  Tables 1 and 3
hold three consecutive rows per parameter tuple, for expansion orders 0, 1
and 2.
"""

TABLE1_POINTS = (2.5, 5.0, 7.5, 10.0, 12.5, 15.0)
PROBABILITIES = (0.95, 0.975, 0.99, 0.995, 0.999, 0.9999)

TABLE1 = (
    ((1, -1, -0.5, 1), 0, ('4.4E-02', '2.3E-02', '1.6E-02', '1.2E-02', '9.7E-03', '8.1E-03')),
    ((1, -1, -0.5, 1), 1, ('-8.4E-03', '-2.3E-03', '-1.1E-03', '-6.2E-04', '-4.0E-04', '-2.8E-04')),
    ((1, -1, -0.5, 1), 2, ('2.9E-03', '4.2E-04', '1.3E-04', '5.8E-05', '3.0E-05', '1.8E-05')),
    ((1, -1, 0.0, 1), 0, ('8.2E-02', '4.5E-02', '3.1E-02', '2.4E-02', '1.9E-02', '1.6E-02')),
    ((1, -1, 0.0, 1), 1, ('-2.6E-02', '-7.6E-03', '-3.6E-03', '-2.1E-03', '-1.4E-03', '-9.6E-04')),
    ((1, -1, 0.0, 1), 2, ('1.4E-02', '2.2E-03', '7.1E-04', '3.1E-04', '1.7E-04', '9.8E-05')),
    ((1, -1, 0.5, 1), 0, ('1.2E-01', '6.7E-02', '4.6E-02', '3.5E-02', '2.9E-02', '2.4E-02')),
    ((1, -1, 0.5, 1), 1, ('-4.5E-02', '-1.3E-02', '-6.1E-03', '-3.5E-03', '-2.3E-03', '-1.6E-03')),
    ((1, -1, 0.5, 1), 2, ('2.6E-02', '3.9E-03', '1.3E-03', '5.5E-04', '2.9E-04', '1.7E-04')),
    ((1, 0, -0.5, 1), 0, ('-9.0E-02', '-7.2E-02', '-6.1E-02', '-5.5E-02', '-5.0E-02', '-4.6E-02')),
    ((1, 0, -0.5, 1), 1, ('2.7E-02', '1.3E-02', '8.1E-03', '5.9E-03', '4.5E-03', '3.7E-03')),
    ((1, 0, -0.5, 1), 2, ('1.2E-02', '5.4E-03', '3.1E-03', '2.1E-03', '1.5E-03', '1.2E-03')),
    ((1, 0, 0.0, 1), 0, ('-7.2E-02', '-4.8E-02', '-4.0E-02', '-3.5E-02', '-3.3E-02', '-3.0E-02')),
    ((1, 0, 0.0, 1), 1, ('2.0E-02', '1.8E-02', '1.5E-02', '1.2E-02', '1.0E-02', '8.7E-03')),
    ((1, 0, 0.0, 1), 2, ('-2.5E-02', '-4.9E-03', '-6.0E-04', '5.7E-04', '8.7E-04', '8.9E-04')),
    ((1, 0, 0.5, 1), 0, ('-1.0E-01', '-6.0E-02', '-4.1E-02', '-3.2E-02', '-2.6E-02', '-2.3E-02')),
    ((1, 0, 0.5, 1), 1, ('-4.2E-02', '-1.4E-02', '-3.0E-03', '1.9E-03', '4.1E-03', '5.0E-03')),
    ((1, 0, 0.5, 1), 2, ('-9.5E-02', '-4.2E-02', '-2.2E-02', '-1.2E-02', '-7.5E-03', '-4.7E-03')),
    ((1, 1, -0.5, 1), 0, ('-2.1E-01', '-1.6E-01', '-1.3E-01', '-1.1E-01', '-1.0E-01', '-9.4E-02')),
    ((1, 1, -0.5, 1), 1, ('-2.3E-02', '-1.5E-02', '-1.1E-02', '-9.0E-03', '-7.4E-03', '-6.4E-03')),
    ((1, 1, -0.5, 1), 2, ('1.4E-02', '4.6E-03', '2.3E-03', '1.4E-03', '9.8E-04', '7.2E-04')),
    ((1, 1, 0.0, 1), 0, ('-1.1E-01', '-8.8E-02', '-7.6E-02', '-6.8E-02', '-6.2E-02', '-5.7E-02')),
    ((1, 1, 0.0, 1), 1, ('3.0E-02', '1.4E-02', '8.4E-03', '5.9E-03', '4.5E-03', '3.7E-03')),
    ((1, 1, 0.0, 1), 2, ('1.9E-02', '8.0E-03', '4.6E-03', '3.0E-03', '2.2E-03', '1.7E-03')),
    ((1, 1, 0.5, 1), 0, ('-5.4E-02', '-4.0E-02', '-3.4E-02', '-3.1E-02', '-2.8E-02', '-2.6E-02')),
    ((1, 1, 0.5, 1), 1, ('2.1E-02', '1.4E-02', '1.0E-02', '7.8E-03', '6.3E-03', '5.2E-03')),
    ((1, 1, 0.5, 1), 2, ('-6.0E-03', '6.5E-04', '1.1E-03', '1.0E-03', '8.1E-04', '6.6E-04')),
)

TABLE3 = (
    ((1, -1, -0.5, 1), 0, ('5.2E-01', '3.6E-01', '2.6E-01', '2.1E-01', '1.5E-01', '9.5E-02')),
    ((1, -1, -0.5, 1), 1, ('-2.5E+00', '-1.3E+00', '-7.4E-01', '-5.4E-01', '-3.2E-01', '-2.0E-01')),
    ((1, -1, -0.5, 1), 2, ('1.6E+01', '5.0E+00', '1.7E+00', '9.2E-01', '2.9E-01', '5.2E-02')),
    ((1, -1, 0.0, 1), 0, ('4.3E-01', '3.1E-01', '2.3E-01', '1.9E-01', '1.4E-01', '9.1E-02')),
    ((1, -1, 0.0, 1), 1, ('-1.7E+00', '-1.0E+00', '-6.3E-01', '-4.7E-01', '-3.0E-01', '-1.9E-01')),
    ((1, -1, 0.0, 1), 2, ('8.6E+00', '3.2E+00', '1.2E+00', '6.9E-01', '2.2E-01', '3.9E-02')),
    ((1, -1, 0.5, 1), 0, ('4.0E-01', '3.0E-01', '2.2E-01', '1.8E-01', '1.3E-01', '9.2E-02')),
    ((1, -1, 0.5, 1), 1, ('-1.5E+00', '-9.0E-01', '-5.7E-01', '-4.4E-01', '-2.8E-01', '-1.8E-01')),
    ((1, -1, 0.5, 1), 2, ('6.3E+00', '2.5E+00', '1.0E+00', '5.9E-01', '1.9E-01', '3.3E-02')),
    ((1, 0, -0.5, 1), 0, ('-3.1E-01', '-2.9E-01', '-2.8E-01', '-2.6E-01', '-2.4E-01', '-2.2E-01')),
    ((1, 0, -0.5, 1), 1, ('1.2E-01', '8.5E-02', '6.0E-02', '4.7E-02', '3.4E-02', '2.5E-02')),
    ((1, 0, -0.5, 1), 2, ('1.6E-01', '1.1E-01', '7.9E-02', '6.4E-02', '4.7E-02', '3.5E-02')),
    ((1, 0, 0.0, 1), 0, ('-1.8E-01', '-1.7E-01', '-1.6E-01', '-1.6E-01', '-1.5E-01', '-1.2E-01')),
    ((1, 0, 0.0, 1), 1, ('1.8E-01', '1.4E-01', '1.0E-01', '8.9E-02', '7.0E-02', '6.4E-02')),
    ((1, 0, 0.0, 1), 2, ('7.7E-02', '6.0E-02', '4.6E-02', '3.9E-02', '3.3E-02', '3.6E-02')),
    ((1, 0, 0.5, 1), 0, ('-1.3E-01', '-1.3E-01', '-1.2E-01', '-1.2E-01', '-1.1E-01', '-9.0E-02')),
    ((1, 0, 0.5, 1), 1, ('1.6E-01', '1.3E-01', '9.9E-02', '8.6E-02', '6.7E-02', '6.2E-02')),
    ((1, 0, 0.5, 1), 2, ('7.9E-03', '1.1E-02', '1.2E-02', '1.2E-02', '1.2E-02', '2.1E-02')),
    ((1, 1, -0.5, 1), 0, ('-5.5E-01', '-5.2E-01', '-4.9E-01', '-4.7E-01', '-4.4E-01', '-4.1E-01')),
    ((1, 1, -0.5, 1), 1, ('-1.9E-01', '-1.7E-01', '-1.5E-01', '-1.4E-01', '-1.2E-01', '-1.1E-01')),
    ((1, 1, -0.5, 1), 2, ('1.5E-03', '-2.9E-03', '-5.1E-03', '-5.1E-03', '-8.8E-03', '-2.0E-02')),
    ((1, 1, 0.0, 1), 0, ('-3.9E-01', '-3.7E-01', '-3.4E-01', '-3.3E-01', '-3.1E-01', '-2.8E-01')),
    ((1, 1, 0.0, 1), 1, ('-2.2E-02', '-2.6E-02', '-2.6E-02', '-2.6E-02', '-2.9E-02', '-2.6E-02')),
    ((1, 1, 0.0, 1), 2, ('8.0E-02', '5.9E-02', '4.5E-02', '3.7E-02', '2.2E-02', '1.4E-02')),
    ((1, 1, 0.5, 1), 0, ('-2.9E-01', '-2.8E-01', '-2.6E-01', '-2.5E-01', '-2.3E-01', '-2.2E-01')),
    ((1, 1, 0.5, 1), 1, ('4.6E-02', '3.1E-02', '2.2E-02', '1.2E-02', '4.0E-03', '-1.6E-02')),
    ((1, 1, 0.5, 1), 2, ('8.4E-02', '6.2E-02', '4.8E-02', '3.4E-02', '2.2E-02', '-2.6E-03')),
)

TABLE4 = (
    ((1, -1, -0.5, 3), (None, '1.4E+00', '1.6E-01', '1.7E-02', '-6.3E-02', '-7.0E-02')),
    ((1, -1, -0.5, 5), (None, None, '-2.7E-01', '-2.5E-01', '-1.8E-01', '-1.2E-01')),
    ((1, -1, -0.5, 7), (None, None, None, None, '-3.4E-01', '-1.8E-01')),
    ((1, -1, 0.0, 3), ('5.7E-01', '1.3E-01', '-1.3E-02', '-4.8E-02', '-6.9E-02', '-7.1E-02')),
    ((1, -1, 0.0, 5), ('-2.9E-01', '-2.5E-01', '-2.0E-01', '-1.7E-01', '-1.3E-01', '-9.8E-02')),
    ((1, -1, 0.0, 7), (None, '-4.9E-01', '-3.2E-01', '-2.5E-01', '-1.7E-01', '-1.2E-01')),
    ((1, -1, 0.5, 3), ('1.6E-01', '1.9E-02', '-4.3E-02', '-6.0E-02', '-7.0E-02', '-7.0E-02')),
    ((1, -1, 0.5, 5), ('-2.4E-01', '-2.0E-01', '-1.6E-01', '-1.4E-01', '-1.1E-01', '-8.3E-02')),
    ((1, -1, 0.5, 7), ('-3.5E-01', '-2.7E-01', '-2.1E-01', '-1.8E-01', '-1.3E-01', '-1.0E-01')),
    ((1, 0, -0.5, 3), ('-1.4E-01', '-1.2E-01', '-1.0E-01', '-9.0E-02', '-7.3E-02', '-5.3E-02')),
    ((1, 0, -0.5, 5), ('-5.9E-01', '-5.1E-01', '-4.3E-01', '-3.8E-01', '-3.1E-01', '-2.4E-01')),
    ((1, 0, -0.5, 7), ('-8.7E-01', '-8.0E-01', '-7.1E-01', '-6.6E-01', '-5.6E-01', '-4.6E-01')),
    ((1, 0, 0.0, 3), ('9.1E-03', '3.0E-03', '-7.3E-04', '-7.1E-04', '-4.0E-03', '5.1E-03')),
    ((1, 0, 0.0, 5), ('-2.2E-01', '-1.8E-01', '-1.5E-01', '-1.3E-01', '-1.1E-01', '-8.8E-02')),
    ((1, 0, 0.0, 7), ('-4.4E-01', '-3.8E-01', '-3.2E-01', '-2.9E-01', '-2.4E-01', '-1.9E-01')),
    ((1, 0, 0.5, 3), ('2.9E-02', '2.0E-02', '1.3E-02', '1.3E-02', '3.7E-03', '4.7E-03')),
    ((1, 0, 0.5, 5), ('-8.6E-02', '-7.1E-02', '-5.9E-02', '-5.2E-02', '-4.1E-02', '-3.2E-02')),
    ((1, 0, 0.5, 7), ('-2.0E-01', '-1.7E-01', '-1.4E-01', '-1.2E-01', '-9.4E-02', '-7.3E-02')),
    ((1, 1, -0.5, 3), ('-4.5E-01', '-4.1E-01', '-3.6E-01', '-3.3E-01', '-2.7E-01', '-2.2E-01')),
    ((1, 1, -0.5, 5), ('-7.5E-01', '-7.0E-01', '-6.5E-01', '-6.2E-01', '-5.5E-01', '-4.8E-01')),
    ((1, 1, -0.5, 7), ('-9.0E-01', '-8.7E-01', '-8.3E-01', '-8.1E-01', '-7.5E-01', '-6.8E-01')),
    ((1, 1, 0.0, 3), ('-1.7E-01', '-1.5E-01', '-1.3E-01', '-1.2E-01', '-9.1E-02', '-6.7E-02')),
    ((1, 1, 0.0, 5), ('-4.0E-01', '-3.6E-01', '-3.1E-01', '-2.9E-01', '-2.4E-01', '-1.9E-01')),
    ((1, 1, 0.0, 7), ('-5.7E-01', '-5.3E-01', '-4.8E-01', '-4.5E-01', '-3.9E-01', '-3.3E-01')),
    ((1, 1, 0.5, 3), ('-6.8E-02', '-5.8E-02', '-4.9E-02', '-4.4E-02', '-3.8E-02', '-1.4E-02')),
    ((1, 1, 0.5, 5), ('-1.9E-01', '-1.7E-01', '-1.4E-01', '-1.3E-01', '-1.0E-01', '-1.0E-01')),
    ((1, 1, 0.5, 7), ('-2.9E-01', '-2.6E-01', '-2.3E-01', '-2.1E-01', '-1.7E-01', '-1.5E-01')),
)

TABLE5 = (
    ((1, -1, -0.5, 3), (None, '1.0E-01', '2.2E-02', '9.1E-03', '9.8E-04', '-8.0E-04')),
    ((1, -1, -0.5, 5), (None, None, '2.6E-01', '2.4E-02', '-2.0E-02', '-1.9E-02')),
    ((1, -1, -0.5, 7), (None, None, None, None, '-5.7E-02', '-5.2E-02')),
    ((1, -1, 0.0, 3), ('-7.4E-02', '-4.4E-02', '-2.7E-02', '-2.1E-02', '-1.3E-02', '-8.2E-03')),
    ((1, -1, 0.0, 5), ('-8.2E-01', '-3.3E-01', '-1.8E-01', '-1.3E-01', '-7.8E-02', '-4.7E-02')),
    ((1, -1, 0.0, 7), (None, '-1.2E+00', '-4.7E-01', '-3.2E-01', '-1.8E-01', '-1.1E-01')),
    ((1, -1, 0.5, 3), ('-9.6E-02', '-6.1E-02', '-3.9E-02', '-3.0E-02', '-1.8E-02', '-1.1E-02')),
    ((1, -1, 0.5, 5), ('-4.6E-01', '-2.9E-01', '-1.9E-01', '-1.4E-01', '-9.0E-02', '-5.5E-02')),
    ((1, -1, 0.5, 7), ('-9.9E-01', '-6.0E-01', '-3.9E-01', '-3.0E-01', '-1.9E-01', '-1.2E-01')),
    ((1, 0, -0.5, 3), ('-1.4E-01', '-1.2E-01', '-1.1E-01', '-9.7E-02', '-8.2E-02', '-6.7E-02')),
    ((1, 0, -0.5, 5), ('-2.4E-01', '-2.0E-01', '-1.6E-01', '-1.5E-01', '-1.2E-01', '-9.8E-02')),
    ((1, 0, -0.5, 7), ('-3.3E-01', '-2.5E-01', '-2.0E-01', '-1.8E-01', '-1.5E-01', '-1.2E-01')),
    ((1, 0, 0.0, 3), ('-1.4E-01', '-1.1E-01', '-9.2E-02', '-8.1E-02', '-6.4E-02', '-4.9E-02')),
    ((1, 0, 0.0, 5), ('-2.4E-01', '-1.9E-01', '-1.5E-01', '-1.3E-01', '-1.0E-01', '-8.0E-02')),
    ((1, 0, 0.0, 7), ('-3.3E-01', '-2.6E-01', '-2.0E-01', '-1.8E-01', '-1.4E-01', '-1.0E-01')),
    ((1, 0, 0.5, 3), ('-1.2E-01', '-1.0E-01', '-8.1E-02', '-7.0E-02', '-5.5E-02', '-4.1E-02')),
    ((1, 0, 0.5, 5), ('-2.1E-01', '-1.7E-01', '-1.3E-01', '-1.2E-01', '-8.9E-02', '-6.7E-02')),
    ((1, 0, 0.5, 7), ('-2.8E-01', '-2.2E-01', '-1.8E-01', '-1.5E-01', '-1.2E-01', '-8.9E-02')),
    ((1, 1, -0.5, 3), ('-3.6E-01', '-3.2E-01', '-2.8E-01', '-2.6E-01', '-2.3E-01', '-1.9E-01')),
    ((1, 1, -0.5, 5), ('-4.6E-01', '-4.1E-01', '-3.6E-01', '-3.4E-01', '-2.9E-01', '-2.5E-01')),
    ((1, 1, -0.5, 7), ('-5.2E-01', '-4.7E-01', '-4.1E-01', '-3.8E-01', '-3.3E-01', '-2.9E-01')),
    ((1, 1, 0.0, 3), ('-2.7E-01', '-2.4E-01', '-2.1E-01', '-1.9E-01', '-1.6E-01', '-1.3E-01')),
    ((1, 1, 0.0, 5), ('-3.8E-01', '-3.3E-01', '-2.9E-01', '-2.6E-01', '-2.2E-01', '-1.8E-01')),
    ((1, 1, 0.0, 7), ('-4.5E-01', '-3.9E-01', '-3.4E-01', '-3.1E-01', '-2.6E-01', '-2.2E-01')),
    ((1, 1, 0.5, 3), ('-2.2E-01', '-1.9E-01', '-1.7E-01', '-1.5E-01', '-1.3E-01', '-1.0E-01')),
    ((1, 1, 0.5, 5), ('-3.2E-01', '-2.8E-01', '-2.4E-01', '-2.2E-01', '-1.8E-01', '-1.5E-01')),
    ((1, 1, 0.5, 7), ('-3.9E-01', '-3.3E-01', '-2.9E-01', '-2.6E-01', '-2.2E-01', '-1.8E-01')),
)

REFERENCE_TABLES = {1: TABLE1, 3: TABLE3, 4: TABLE4, 5: TABLE5}
