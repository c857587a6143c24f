//! Lebedev–Laikov sphere rules (nodes on the unit sphere, weights summing to 4π).

#[rustfmt::skip]
pub(crate) static RULES: &[(usize, &[[f64; 4]])] = &[
    (3, &[
        [1.0, 0.0, 0.0, 2.094395102393196],
        [-1.0, 0.0, 0.0, 2.094395102393196],
        [0.0, 1.0, 0.0, 2.094395102393196],
        [0.0, -1.0, 0.0, 2.094395102393196],
        [0.0, 0.0, 1.0, 2.094395102393196],
        [0.0, 0.0, -1.0, 2.094395102393196],
    ]),
    (5, &[
        [1.0, 0.0, 0.0, 0.8377580409572781],
        [-1.0, 0.0, 0.0, 0.8377580409572781],
        [0.0, 1.0, 0.0, 0.8377580409572781],
        [0.0, -1.0, 0.0, 0.8377580409572781],
        [0.0, 0.0, 1.0, 0.8377580409572781],
        [0.0, 0.0, -1.0, 0.8377580409572781],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379],
    ]),
    (7, &[
        [1.0, 0.0, 0.0, 0.5983986006837702],
        [-1.0, 0.0, 0.0, 0.5983986006837702],
        [0.0, 1.0, 0.0, 0.5983986006837702],
        [0.0, -1.0, 0.0, 0.5983986006837702],
        [0.0, 0.0, 1.0, 0.5983986006837702],
        [0.0, 0.0, -1.0, 0.5983986006837702],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.4787188805470161],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.4787188805470161],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.4787188805470161],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.4787188805470161],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
    ]),
    (9, &[
        [1.0, 0.0, 0.0, 0.11967972013675403],
        [-1.0, 0.0, 0.0, 0.11967972013675403],
        [0.0, 1.0, 0.0, 0.11967972013675403],
        [0.0, -1.0, 0.0, 0.11967972013675403],
        [0.0, 0.0, 1.0, 0.11967972013675403],
        [0.0, 0.0, -1.0, 0.11967972013675403],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448],
        [0.4597008433809831, 0.8880738339771153, 0.0, 0.35903916041026207],
        [-0.4597008433809831, 0.8880738339771153, 0.0, 0.35903916041026207],
        [0.4597008433809831, -0.8880738339771153, 0.0, 0.35903916041026207],
        [-0.4597008433809831, -0.8880738339771153, 0.0, 0.35903916041026207],
        [0.8880738339771153, 0.4597008433809831, 0.0, 0.35903916041026207],
        [-0.8880738339771153, 0.4597008433809831, 0.0, 0.35903916041026207],
        [0.8880738339771153, -0.4597008433809831, 0.0, 0.35903916041026207],
        [-0.8880738339771153, -0.4597008433809831, 0.0, 0.35903916041026207],
        [0.4597008433809831, 0.0, 0.8880738339771153, 0.35903916041026207],
        [-0.4597008433809831, 0.0, 0.8880738339771153, 0.35903916041026207],
        [0.4597008433809831, 0.0, -0.8880738339771153, 0.35903916041026207],
        [-0.4597008433809831, 0.0, -0.8880738339771153, 0.35903916041026207],
        [0.8880738339771153, 0.0, 0.4597008433809831, 0.35903916041026207],
        [-0.8880738339771153, 0.0, 0.4597008433809831, 0.35903916041026207],
        [0.8880738339771153, 0.0, -0.4597008433809831, 0.35903916041026207],
        [-0.8880738339771153, 0.0, -0.4597008433809831, 0.35903916041026207],
        [0.0, 0.4597008433809831, 0.8880738339771153, 0.35903916041026207],
        [0.0, -0.4597008433809831, 0.8880738339771153, 0.35903916041026207],
        [0.0, 0.4597008433809831, -0.8880738339771153, 0.35903916041026207],
        [0.0, -0.4597008433809831, -0.8880738339771153, 0.35903916041026207],
        [0.0, 0.8880738339771153, 0.4597008433809831, 0.35903916041026207],
        [0.0, -0.8880738339771153, 0.4597008433809831, 0.35903916041026207],
        [0.0, 0.8880738339771153, -0.4597008433809831, 0.35903916041026207],
        [0.0, -0.8880738339771153, -0.4597008433809831, 0.35903916041026207],
    ]),
    (11, &[
        [1.0, 0.0, 0.0, 0.1595729601823387],
        [-1.0, 0.0, 0.0, 0.1595729601823387],
        [0.0, 1.0, 0.0, 0.1595729601823387],
        [0.0, -1.0, 0.0, 0.1595729601823387],
        [0.0, 0.0, 1.0, 0.1595729601823387],
        [0.0, 0.0, -1.0, 0.1595729601823387],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.2836852625463799],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.2836852625463799],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.2836852625463799],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.2836852625463799],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388],
        [0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113],
        [-0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113],
        [0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113],
        [0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113],
        [-0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113],
        [-0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113],
        [0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113],
        [-0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113],
        [-0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113],
        [0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113],
        [0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113],
        [-0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113],
        [-0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113],
        [0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113],
        [-0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113],
        [0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113],
        [0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113],
        [-0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113],
        [0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113],
        [0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113],
        [-0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113],
        [-0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113],
        [0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113],
        [-0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113],
    ]),
    (15, &[
        [1.0, 0.0, 0.0, 0.14506632743848968],
        [-1.0, 0.0, 0.0, 0.14506632743848968],
        [0.0, 1.0, 0.0, 0.14506632743848968],
        [0.0, -1.0, 0.0, 0.14506632743848968],
        [0.0, 0.0, 1.0, 0.14506632743848968],
        [0.0, 0.0, -1.0, 0.14506632743848968],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.15009158815708187],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.15009158815708187],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.15009158815708187],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.15009158815708187],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.15009158815708187],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.15009158815708187],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.15009158815708187],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.15009158815708187],
        [0.3696028464541502, 0.3696028464541502, 0.8525183117012676, 0.13961936079092707],
        [-0.3696028464541502, 0.3696028464541502, 0.8525183117012676, 0.13961936079092707],
        [0.3696028464541502, -0.3696028464541502, 0.8525183117012676, 0.13961936079092707],
        [0.3696028464541502, 0.3696028464541502, -0.8525183117012676, 0.13961936079092707],
        [-0.3696028464541502, -0.3696028464541502, 0.8525183117012676, 0.13961936079092707],
        [-0.3696028464541502, 0.3696028464541502, -0.8525183117012676, 0.13961936079092707],
        [0.3696028464541502, -0.3696028464541502, -0.8525183117012676, 0.13961936079092707],
        [-0.3696028464541502, -0.3696028464541502, -0.8525183117012676, 0.13961936079092707],
        [-0.3696028464541502, 0.8525183117012676, 0.3696028464541502, 0.13961936079092707],
        [0.3696028464541502, -0.8525183117012676, 0.3696028464541502, 0.13961936079092707],
        [0.3696028464541502, 0.8525183117012676, -0.3696028464541502, 0.13961936079092707],
        [-0.3696028464541502, -0.8525183117012676, 0.3696028464541502, 0.13961936079092707],
        [-0.3696028464541502, 0.8525183117012676, -0.3696028464541502, 0.13961936079092707],
        [0.3696028464541502, -0.8525183117012676, -0.3696028464541502, 0.13961936079092707],
        [-0.3696028464541502, -0.8525183117012676, -0.3696028464541502, 0.13961936079092707],
        [0.3696028464541502, 0.8525183117012676, 0.3696028464541502, 0.13961936079092707],
        [0.8525183117012676, 0.3696028464541502, 0.3696028464541502, 0.13961936079092707],
        [-0.8525183117012676, 0.3696028464541502, 0.3696028464541502, 0.13961936079092707],
        [0.8525183117012676, -0.3696028464541502, 0.3696028464541502, 0.13961936079092707],
        [0.8525183117012676, 0.3696028464541502, -0.3696028464541502, 0.13961936079092707],
        [-0.8525183117012676, -0.3696028464541502, 0.3696028464541502, 0.13961936079092707],
        [-0.8525183117012676, 0.3696028464541502, -0.3696028464541502, 0.13961936079092707],
        [0.8525183117012676, -0.3696028464541502, -0.3696028464541502, 0.13961936079092707],
        [-0.8525183117012676, -0.3696028464541502, -0.3696028464541502, 0.13961936079092707],
        [0.6943540066026664, 0.6943540066026664, 0.18906355288539498, 0.1492445168690702],
        [-0.6943540066026664, 0.6943540066026664, 0.18906355288539498, 0.1492445168690702],
        [0.6943540066026664, -0.6943540066026664, 0.18906355288539498, 0.1492445168690702],
        [0.6943540066026664, 0.6943540066026664, -0.18906355288539498, 0.1492445168690702],
        [-0.6943540066026664, -0.6943540066026664, 0.18906355288539498, 0.1492445168690702],
        [-0.6943540066026664, 0.6943540066026664, -0.18906355288539498, 0.1492445168690702],
        [0.6943540066026664, -0.6943540066026664, -0.18906355288539498, 0.1492445168690702],
        [-0.6943540066026664, -0.6943540066026664, -0.18906355288539498, 0.1492445168690702],
        [-0.6943540066026664, 0.18906355288539498, 0.6943540066026664, 0.1492445168690702],
        [0.6943540066026664, -0.18906355288539498, 0.6943540066026664, 0.1492445168690702],
        [0.6943540066026664, 0.18906355288539498, -0.6943540066026664, 0.1492445168690702],
        [-0.6943540066026664, -0.18906355288539498, 0.6943540066026664, 0.1492445168690702],
        [-0.6943540066026664, 0.18906355288539498, -0.6943540066026664, 0.1492445168690702],
        [0.6943540066026664, -0.18906355288539498, -0.6943540066026664, 0.1492445168690702],
        [-0.6943540066026664, -0.18906355288539498, -0.6943540066026664, 0.1492445168690702],
        [0.6943540066026664, 0.18906355288539498, 0.6943540066026664, 0.1492445168690702],
        [0.18906355288539498, 0.6943540066026664, 0.6943540066026664, 0.1492445168690702],
        [-0.18906355288539498, 0.6943540066026664, 0.6943540066026664, 0.1492445168690702],
        [0.18906355288539498, -0.6943540066026664, 0.6943540066026664, 0.1492445168690702],
        [0.18906355288539498, 0.6943540066026664, -0.6943540066026664, 0.1492445168690702],
        [-0.18906355288539498, -0.6943540066026664, 0.6943540066026664, 0.1492445168690702],
        [-0.18906355288539498, 0.6943540066026664, -0.6943540066026664, 0.1492445168690702],
        [0.18906355288539498, -0.6943540066026664, -0.6943540066026664, 0.1492445168690702],
        [-0.18906355288539498, -0.6943540066026664, -0.6943540066026664, 0.1492445168690702],
        [0.3742430390903412, 0.9273306571511725, 0.0, 0.1484377866929852],
        [-0.3742430390903412, 0.9273306571511725, 0.0, 0.1484377866929852],
        [0.3742430390903412, -0.9273306571511725, 0.0, 0.1484377866929852],
        [-0.3742430390903412, -0.9273306571511725, 0.0, 0.1484377866929852],
        [0.9273306571511725, 0.3742430390903412, 0.0, 0.1484377866929852],
        [-0.9273306571511725, 0.3742430390903412, 0.0, 0.1484377866929852],
        [0.9273306571511725, -0.3742430390903412, 0.0, 0.1484377866929852],
        [-0.9273306571511725, -0.3742430390903412, 0.0, 0.1484377866929852],
        [0.3742430390903412, 0.0, 0.9273306571511725, 0.1484377866929852],
        [-0.3742430390903412, 0.0, 0.9273306571511725, 0.1484377866929852],
        [0.3742430390903412, 0.0, -0.9273306571511725, 0.1484377866929852],
        [-0.3742430390903412, 0.0, -0.9273306571511725, 0.1484377866929852],
        [0.9273306571511725, 0.0, 0.3742430390903412, 0.1484377866929852],
        [-0.9273306571511725, 0.0, 0.3742430390903412, 0.1484377866929852],
        [0.9273306571511725, 0.0, -0.3742430390903412, 0.1484377866929852],
        [-0.9273306571511725, 0.0, -0.3742430390903412, 0.1484377866929852],
        [0.0, 0.3742430390903412, 0.9273306571511725, 0.1484377866929852],
        [0.0, -0.3742430390903412, 0.9273306571511725, 0.1484377866929852],
        [0.0, 0.3742430390903412, -0.9273306571511725, 0.1484377866929852],
        [0.0, -0.3742430390903412, -0.9273306571511725, 0.1484377866929852],
        [0.0, 0.9273306571511725, 0.3742430390903412, 0.1484377866929852],
        [0.0, -0.9273306571511725, 0.3742430390903412, 0.1484377866929852],
        [0.0, 0.9273306571511725, -0.3742430390903412, 0.1484377866929852],
        [0.0, -0.9273306571511725, -0.3742430390903412, 0.1484377866929852],
    ]),
    (17, &[
        [1.0, 0.0, 0.0, 0.048107465851396594],
        [-1.0, 0.0, 0.0, 0.048107465851396594],
        [0.0, 1.0, 0.0, 0.048107465851396594],
        [0.0, -1.0, 0.0, 0.048107465851396594],
        [0.0, 0.0, 1.0, 0.048107465851396594],
        [0.0, 0.0, -1.0, 0.048107465851396594],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017],
        [0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304],
        [-0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304],
        [0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304],
        [0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304],
        [-0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304],
        [-0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304],
        [0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304],
        [-0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304],
        [-0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304],
        [0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304],
        [0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304],
        [-0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304],
        [-0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304],
        [0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304],
        [-0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304],
        [0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304],
        [0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304],
        [-0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304],
        [0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304],
        [0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304],
        [-0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304],
        [-0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304],
        [0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304],
        [-0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304],
        [0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133],
        [-0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133],
        [0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133],
        [0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133],
        [-0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133],
        [-0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133],
        [0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133],
        [-0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133],
        [-0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133],
        [0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133],
        [0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133],
        [-0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133],
        [-0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133],
        [0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133],
        [-0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133],
        [0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133],
        [0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133],
        [-0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133],
        [0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133],
        [0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133],
        [-0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133],
        [-0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133],
        [0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133],
        [-0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133],
        [0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789],
        [-0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789],
        [0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789],
        [0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789],
        [-0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789],
        [-0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789],
        [0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789],
        [-0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789],
        [-0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789],
        [0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789],
        [0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789],
        [-0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789],
        [-0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789],
        [0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789],
        [-0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789],
        [0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789],
        [0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789],
        [-0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789],
        [0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789],
        [0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789],
        [-0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789],
        [-0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789],
        [0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789],
        [-0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789],
        [0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138],
        [-0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138],
        [0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138],
        [-0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138],
        [0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138],
        [-0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138],
        [0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138],
        [-0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138],
        [0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138],
        [-0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138],
        [0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138],
        [-0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138],
        [0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138],
        [-0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138],
        [0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138],
        [-0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138],
        [0.0, 0.4783690288121502, 0.8781589106040661, 0.12183091738552138],
        [0.0, -0.4783690288121502, 0.8781589106040661, 0.12183091738552138],
        [0.0, 0.4783690288121502, -0.8781589106040661, 0.12183091738552138],
        [0.0, -0.4783690288121502, -0.8781589106040661, 0.12183091738552138],
        [0.0, 0.8781589106040661, 0.4783690288121502, 0.12183091738552138],
        [0.0, -0.8781589106040661, 0.4783690288121502, 0.12183091738552138],
        [0.0, 0.8781589106040661, -0.4783690288121502, 0.12183091738552138],
        [0.0, -0.8781589106040661, -0.4783690288121502, 0.12183091738552138],
    ]),
    (19, &[
        [1.0, 0.0, 0.0, 0.007535190013117138],
        [-1.0, 0.0, 0.0, 0.007535190013117138],
        [0.0, 1.0, 0.0, 0.007535190013117138],
        [0.0, -1.0, 0.0, 0.007535190013117138],
        [0.0, 0.0, 1.0, 0.007535190013117138],
        [0.0, 0.0, -1.0, 0.007535190013117138],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.09265184700375431],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.09265184700375431],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.09265184700375431],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.09265184700375431],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.09265184700375431],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.09265184700375431],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.09265184700375431],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.09265184700375431],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.09265184700375431],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.09265184700375431],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.09265184700375431],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.09265184700375431],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.09061000833610514],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.09061000833610514],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.09061000833610514],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.09061000833610514],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.09061000833610514],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.09061000833610514],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.09061000833610514],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.09061000833610514],
        [0.6764410400114264, 0.6764410400114264, 0.2912988822095268, 0.08942676055004592],
        [-0.6764410400114264, 0.6764410400114264, 0.2912988822095268, 0.08942676055004592],
        [0.6764410400114264, -0.6764410400114264, 0.2912988822095268, 0.08942676055004592],
        [0.6764410400114264, 0.6764410400114264, -0.2912988822095268, 0.08942676055004592],
        [-0.6764410400114264, -0.6764410400114264, 0.2912988822095268, 0.08942676055004592],
        [-0.6764410400114264, 0.6764410400114264, -0.2912988822095268, 0.08942676055004592],
        [0.6764410400114264, -0.6764410400114264, -0.2912988822095268, 0.08942676055004592],
        [-0.6764410400114264, -0.6764410400114264, -0.2912988822095268, 0.08942676055004592],
        [-0.6764410400114264, 0.2912988822095268, 0.6764410400114264, 0.08942676055004592],
        [0.6764410400114264, -0.2912988822095268, 0.6764410400114264, 0.08942676055004592],
        [0.6764410400114264, 0.2912988822095268, -0.6764410400114264, 0.08942676055004592],
        [-0.6764410400114264, -0.2912988822095268, 0.6764410400114264, 0.08942676055004592],
        [-0.6764410400114264, 0.2912988822095268, -0.6764410400114264, 0.08942676055004592],
        [0.6764410400114264, -0.2912988822095268, -0.6764410400114264, 0.08942676055004592],
        [-0.6764410400114264, -0.2912988822095268, -0.6764410400114264, 0.08942676055004592],
        [0.6764410400114264, 0.2912988822095268, 0.6764410400114264, 0.08942676055004592],
        [0.2912988822095268, 0.6764410400114264, 0.6764410400114264, 0.08942676055004592],
        [-0.2912988822095268, 0.6764410400114264, 0.6764410400114264, 0.08942676055004592],
        [0.2912988822095268, -0.6764410400114264, 0.6764410400114264, 0.08942676055004592],
        [0.2912988822095268, 0.6764410400114264, -0.6764410400114264, 0.08942676055004592],
        [-0.2912988822095268, -0.6764410400114264, 0.6764410400114264, 0.08942676055004592],
        [-0.2912988822095268, 0.6764410400114264, -0.6764410400114264, 0.08942676055004592],
        [0.2912988822095268, -0.6764410400114264, -0.6764410400114264, 0.08942676055004592],
        [-0.2912988822095268, -0.6764410400114264, -0.6764410400114264, 0.08942676055004592],
        [0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.08487112439121475],
        [-0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.08487112439121475],
        [0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.08487112439121475],
        [0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.08487112439121475],
        [-0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.08487112439121475],
        [-0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.08487112439121475],
        [0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.08487112439121475],
        [-0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.08487112439121475],
        [-0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.08487112439121475],
        [0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.08487112439121475],
        [0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.08487112439121475],
        [-0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.08487112439121475],
        [-0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.08487112439121475],
        [0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.08487112439121475],
        [-0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.08487112439121475],
        [0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.08487112439121475],
        [0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.08487112439121475],
        [-0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.08487112439121475],
        [0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.08487112439121475],
        [0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.08487112439121475],
        [-0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.08487112439121475],
        [-0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.08487112439121475],
        [0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.08487112439121475],
        [-0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.08487112439121475],
        [0.1574676672039082, 0.1574676672039082, 0.9748886436771732, 0.09518264418191037],
        [-0.1574676672039082, 0.1574676672039082, 0.9748886436771732, 0.09518264418191037],
        [0.1574676672039082, -0.1574676672039082, 0.9748886436771732, 0.09518264418191037],
        [0.1574676672039082, 0.1574676672039082, -0.9748886436771732, 0.09518264418191037],
        [-0.1574676672039082, -0.1574676672039082, 0.9748886436771732, 0.09518264418191037],
        [-0.1574676672039082, 0.1574676672039082, -0.9748886436771732, 0.09518264418191037],
        [0.1574676672039082, -0.1574676672039082, -0.9748886436771732, 0.09518264418191037],
        [-0.1574676672039082, -0.1574676672039082, -0.9748886436771732, 0.09518264418191037],
        [-0.1574676672039082, 0.9748886436771732, 0.1574676672039082, 0.09518264418191037],
        [0.1574676672039082, -0.9748886436771732, 0.1574676672039082, 0.09518264418191037],
        [0.1574676672039082, 0.9748886436771732, -0.1574676672039082, 0.09518264418191037],
        [-0.1574676672039082, -0.9748886436771732, 0.1574676672039082, 0.09518264418191037],
        [-0.1574676672039082, 0.9748886436771732, -0.1574676672039082, 0.09518264418191037],
        [0.1574676672039082, -0.9748886436771732, -0.1574676672039082, 0.09518264418191037],
        [-0.1574676672039082, -0.9748886436771732, -0.1574676672039082, 0.09518264418191037],
        [0.1574676672039082, 0.9748886436771732, 0.1574676672039082, 0.09518264418191037],
        [0.9748886436771732, 0.1574676672039082, 0.1574676672039082, 0.09518264418191037],
        [-0.9748886436771732, 0.1574676672039082, 0.1574676672039082, 0.09518264418191037],
        [0.9748886436771732, -0.1574676672039082, 0.1574676672039082, 0.09518264418191037],
        [0.9748886436771732, 0.1574676672039082, -0.1574676672039082, 0.09518264418191037],
        [-0.9748886436771732, -0.1574676672039082, 0.1574676672039082, 0.09518264418191037],
        [-0.9748886436771732, 0.1574676672039082, -0.1574676672039082, 0.09518264418191037],
        [0.9748886436771732, -0.1574676672039082, -0.1574676672039082, 0.09518264418191037],
        [-0.9748886436771732, -0.1574676672039082, -0.1574676672039082, 0.09518264418191037],
        [0.1403553811713183, 0.4493328323269557, 0.8822700112603227, 0.08785259467896815],
        [-0.1403553811713183, 0.4493328323269557, 0.8822700112603227, 0.08785259467896815],
        [0.1403553811713183, -0.4493328323269557, 0.8822700112603227, 0.08785259467896815],
        [0.1403553811713183, 0.4493328323269557, -0.8822700112603227, 0.08785259467896815],
        [-0.1403553811713183, -0.4493328323269557, 0.8822700112603227, 0.08785259467896815],
        [0.1403553811713183, -0.4493328323269557, -0.8822700112603227, 0.08785259467896815],
        [-0.1403553811713183, 0.4493328323269557, -0.8822700112603227, 0.08785259467896815],
        [-0.1403553811713183, -0.4493328323269557, -0.8822700112603227, 0.08785259467896815],
        [0.4493328323269557, 0.1403553811713183, 0.8822700112603227, 0.08785259467896815],
        [-0.4493328323269557, 0.1403553811713183, 0.8822700112603227, 0.08785259467896815],
        [0.4493328323269557, -0.1403553811713183, 0.8822700112603227, 0.08785259467896815],
        [0.4493328323269557, 0.1403553811713183, -0.8822700112603227, 0.08785259467896815],
        [-0.4493328323269557, -0.1403553811713183, 0.8822700112603227, 0.08785259467896815],
        [0.4493328323269557, -0.1403553811713183, -0.8822700112603227, 0.08785259467896815],
        [-0.4493328323269557, 0.1403553811713183, -0.8822700112603227, 0.08785259467896815],
        [-0.4493328323269557, -0.1403553811713183, -0.8822700112603227, 0.08785259467896815],
        [0.8822700112603227, 0.1403553811713183, 0.4493328323269557, 0.08785259467896815],
        [-0.8822700112603227, 0.1403553811713183, 0.4493328323269557, 0.08785259467896815],
        [0.8822700112603227, -0.1403553811713183, 0.4493328323269557, 0.08785259467896815],
        [0.8822700112603227, 0.1403553811713183, -0.4493328323269557, 0.08785259467896815],
        [-0.8822700112603227, -0.1403553811713183, 0.4493328323269557, 0.08785259467896815],
        [0.8822700112603227, -0.1403553811713183, -0.4493328323269557, 0.08785259467896815],
        [-0.8822700112603227, 0.1403553811713183, -0.4493328323269557, 0.08785259467896815],
        [-0.8822700112603227, -0.1403553811713183, -0.4493328323269557, 0.08785259467896815],
        [0.8822700112603227, 0.4493328323269557, 0.1403553811713183, 0.08785259467896815],
        [-0.8822700112603227, 0.4493328323269557, 0.1403553811713183, 0.08785259467896815],
        [0.8822700112603227, -0.4493328323269557, 0.1403553811713183, 0.08785259467896815],
        [0.8822700112603227, 0.4493328323269557, -0.1403553811713183, 0.08785259467896815],
        [-0.8822700112603227, -0.4493328323269557, 0.1403553811713183, 0.08785259467896815],
        [0.8822700112603227, -0.4493328323269557, -0.1403553811713183, 0.08785259467896815],
        [-0.8822700112603227, 0.4493328323269557, -0.1403553811713183, 0.08785259467896815],
        [-0.8822700112603227, -0.4493328323269557, -0.1403553811713183, 0.08785259467896815],
        [0.1403553811713183, 0.8822700112603227, 0.4493328323269557, 0.08785259467896815],
        [-0.1403553811713183, 0.8822700112603227, 0.4493328323269557, 0.08785259467896815],
        [0.1403553811713183, -0.8822700112603227, 0.4493328323269557, 0.08785259467896815],
        [0.1403553811713183, 0.8822700112603227, -0.4493328323269557, 0.08785259467896815],
        [-0.1403553811713183, -0.8822700112603227, 0.4493328323269557, 0.08785259467896815],
        [0.1403553811713183, -0.8822700112603227, -0.4493328323269557, 0.08785259467896815],
        [-0.1403553811713183, 0.8822700112603227, -0.4493328323269557, 0.08785259467896815],
        [-0.1403553811713183, -0.8822700112603227, -0.4493328323269557, 0.08785259467896815],
        [0.4493328323269557, 0.8822700112603227, 0.1403553811713183, 0.08785259467896815],
        [-0.4493328323269557, 0.8822700112603227, 0.1403553811713183, 0.08785259467896815],
        [0.4493328323269557, -0.8822700112603227, 0.1403553811713183, 0.08785259467896815],
        [0.4493328323269557, 0.8822700112603227, -0.1403553811713183, 0.08785259467896815],
        [-0.4493328323269557, -0.8822700112603227, 0.1403553811713183, 0.08785259467896815],
        [0.4493328323269557, -0.8822700112603227, -0.1403553811713183, 0.08785259467896815],
        [-0.4493328323269557, 0.8822700112603227, -0.1403553811713183, 0.08785259467896815],
        [-0.4493328323269557, -0.8822700112603227, -0.1403553811713183, 0.08785259467896815],
    ]),
    (21, &[
        [1.0, 0.0, 0.0, 0.06967855090540039],
        [-1.0, 0.0, 0.0, 0.06967855090540039],
        [0.0, 1.0, 0.0, 0.06967855090540039],
        [0.0, -1.0, 0.0, 0.06967855090540039],
        [0.0, 0.0, 1.0, 0.06967855090540039],
        [0.0, 0.0, -1.0, 0.06967855090540039],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.0762946177193528],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.0762946177193528],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.0762946177193528],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.0762946177193528],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.0762946177193528],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.0762946177193528],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.0762946177193528],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.0762946177193528],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.0762946177193528],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.0762946177193528],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.0762946177193528],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.0762946177193528],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.080219623085526],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.080219623085526],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.080219623085526],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.080219623085526],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.080219623085526],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.080219623085526],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.080219623085526],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.080219623085526],
        [0.2551252621114134, 0.2551252621114134, 0.9326425903126906, 0.06513636946550791],
        [-0.2551252621114134, 0.2551252621114134, 0.9326425903126906, 0.06513636946550791],
        [0.2551252621114134, -0.2551252621114134, 0.9326425903126906, 0.06513636946550791],
        [0.2551252621114134, 0.2551252621114134, -0.9326425903126906, 0.06513636946550791],
        [-0.2551252621114134, -0.2551252621114134, 0.9326425903126906, 0.06513636946550791],
        [-0.2551252621114134, 0.2551252621114134, -0.9326425903126906, 0.06513636946550791],
        [0.2551252621114134, -0.2551252621114134, -0.9326425903126906, 0.06513636946550791],
        [-0.2551252621114134, -0.2551252621114134, -0.9326425903126906, 0.06513636946550791],
        [-0.2551252621114134, 0.9326425903126906, 0.2551252621114134, 0.06513636946550791],
        [0.2551252621114134, -0.9326425903126906, 0.2551252621114134, 0.06513636946550791],
        [0.2551252621114134, 0.9326425903126906, -0.2551252621114134, 0.06513636946550791],
        [-0.2551252621114134, -0.9326425903126906, 0.2551252621114134, 0.06513636946550791],
        [-0.2551252621114134, 0.9326425903126906, -0.2551252621114134, 0.06513636946550791],
        [0.2551252621114134, -0.9326425903126906, -0.2551252621114134, 0.06513636946550791],
        [-0.2551252621114134, -0.9326425903126906, -0.2551252621114134, 0.06513636946550791],
        [0.2551252621114134, 0.9326425903126906, 0.2551252621114134, 0.06513636946550791],
        [0.9326425903126906, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791],
        [-0.9326425903126906, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791],
        [0.9326425903126906, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791],
        [0.9326425903126906, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791],
        [-0.9326425903126906, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791],
        [-0.9326425903126906, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791],
        [0.9326425903126906, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791],
        [-0.9326425903126906, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791],
        [0.6743601460362766, 0.6743601460362766, 0.3007935951377015, 0.07939343745253054],
        [-0.6743601460362766, 0.6743601460362766, 0.3007935951377015, 0.07939343745253054],
        [0.6743601460362766, -0.6743601460362766, 0.3007935951377015, 0.07939343745253054],
        [0.6743601460362766, 0.6743601460362766, -0.3007935951377015, 0.07939343745253054],
        [-0.6743601460362766, -0.6743601460362766, 0.3007935951377015, 0.07939343745253054],
        [-0.6743601460362766, 0.6743601460362766, -0.3007935951377015, 0.07939343745253054],
        [0.6743601460362766, -0.6743601460362766, -0.3007935951377015, 0.07939343745253054],
        [-0.6743601460362766, -0.6743601460362766, -0.3007935951377015, 0.07939343745253054],
        [-0.6743601460362766, 0.3007935951377015, 0.6743601460362766, 0.07939343745253054],
        [0.6743601460362766, -0.3007935951377015, 0.6743601460362766, 0.07939343745253054],
        [0.6743601460362766, 0.3007935951377015, -0.6743601460362766, 0.07939343745253054],
        [-0.6743601460362766, -0.3007935951377015, 0.6743601460362766, 0.07939343745253054],
        [-0.6743601460362766, 0.3007935951377015, -0.6743601460362766, 0.07939343745253054],
        [0.6743601460362766, -0.3007935951377015, -0.6743601460362766, 0.07939343745253054],
        [-0.6743601460362766, -0.3007935951377015, -0.6743601460362766, 0.07939343745253054],
        [0.6743601460362766, 0.3007935951377015, 0.6743601460362766, 0.07939343745253054],
        [0.3007935951377015, 0.6743601460362766, 0.6743601460362766, 0.07939343745253054],
        [-0.3007935951377015, 0.6743601460362766, 0.6743601460362766, 0.07939343745253054],
        [0.3007935951377015, -0.6743601460362766, 0.6743601460362766, 0.07939343745253054],
        [0.3007935951377015, 0.6743601460362766, -0.6743601460362766, 0.07939343745253054],
        [-0.3007935951377015, -0.6743601460362766, 0.6743601460362766, 0.07939343745253054],
        [-0.3007935951377015, 0.6743601460362766, -0.6743601460362766, 0.07939343745253054],
        [0.3007935951377015, -0.6743601460362766, -0.6743601460362766, 0.07939343745253054],
        [-0.3007935951377015, -0.6743601460362766, -0.6743601460362766, 0.07939343745253054],
        [0.431891069671941, 0.431891069671941, 0.7917955593934921, 0.07793248373075363],
        [-0.431891069671941, 0.431891069671941, 0.7917955593934921, 0.07793248373075363],
        [0.431891069671941, -0.431891069671941, 0.7917955593934921, 0.07793248373075363],
        [0.431891069671941, 0.431891069671941, -0.7917955593934921, 0.07793248373075363],
        [-0.431891069671941, -0.431891069671941, 0.7917955593934921, 0.07793248373075363],
        [-0.431891069671941, 0.431891069671941, -0.7917955593934921, 0.07793248373075363],
        [0.431891069671941, -0.431891069671941, -0.7917955593934921, 0.07793248373075363],
        [-0.431891069671941, -0.431891069671941, -0.7917955593934921, 0.07793248373075363],
        [-0.431891069671941, 0.7917955593934921, 0.431891069671941, 0.07793248373075363],
        [0.431891069671941, -0.7917955593934921, 0.431891069671941, 0.07793248373075363],
        [0.431891069671941, 0.7917955593934921, -0.431891069671941, 0.07793248373075363],
        [-0.431891069671941, -0.7917955593934921, 0.431891069671941, 0.07793248373075363],
        [-0.431891069671941, 0.7917955593934921, -0.431891069671941, 0.07793248373075363],
        [0.431891069671941, -0.7917955593934921, -0.431891069671941, 0.07793248373075363],
        [-0.431891069671941, -0.7917955593934921, -0.431891069671941, 0.07793248373075363],
        [0.431891069671941, 0.7917955593934921, 0.431891069671941, 0.07793248373075363],
        [0.7917955593934921, 0.431891069671941, 0.431891069671941, 0.07793248373075363],
        [-0.7917955593934921, 0.431891069671941, 0.431891069671941, 0.07793248373075363],
        [0.7917955593934921, -0.431891069671941, 0.431891069671941, 0.07793248373075363],
        [0.7917955593934921, 0.431891069671941, -0.431891069671941, 0.07793248373075363],
        [-0.7917955593934921, -0.431891069671941, 0.431891069671941, 0.07793248373075363],
        [-0.7917955593934921, 0.431891069671941, -0.431891069671941, 0.07793248373075363],
        [0.7917955593934921, -0.431891069671941, -0.431891069671941, 0.07793248373075363],
        [-0.7917955593934921, -0.431891069671941, -0.431891069671941, 0.07793248373075363],
        [0.2613931360335988, 0.9652324219764484, 0.0, 0.06882781368562169],
        [-0.2613931360335988, 0.9652324219764484, 0.0, 0.06882781368562169],
        [0.2613931360335988, -0.9652324219764484, 0.0, 0.06882781368562169],
        [-0.2613931360335988, -0.9652324219764484, 0.0, 0.06882781368562169],
        [0.9652324219764484, 0.2613931360335988, 0.0, 0.06882781368562169],
        [-0.9652324219764484, 0.2613931360335988, 0.0, 0.06882781368562169],
        [0.9652324219764484, -0.2613931360335988, 0.0, 0.06882781368562169],
        [-0.9652324219764484, -0.2613931360335988, 0.0, 0.06882781368562169],
        [0.2613931360335988, 0.0, 0.9652324219764484, 0.06882781368562169],
        [-0.2613931360335988, 0.0, 0.9652324219764484, 0.06882781368562169],
        [0.2613931360335988, 0.0, -0.9652324219764484, 0.06882781368562169],
        [-0.2613931360335988, 0.0, -0.9652324219764484, 0.06882781368562169],
        [0.9652324219764484, 0.0, 0.2613931360335988, 0.06882781368562169],
        [-0.9652324219764484, 0.0, 0.2613931360335988, 0.06882781368562169],
        [0.9652324219764484, 0.0, -0.2613931360335988, 0.06882781368562169],
        [-0.9652324219764484, 0.0, -0.2613931360335988, 0.06882781368562169],
        [0.0, 0.2613931360335988, 0.9652324219764484, 0.06882781368562169],
        [0.0, -0.2613931360335988, 0.9652324219764484, 0.06882781368562169],
        [0.0, 0.2613931360335988, -0.9652324219764484, 0.06882781368562169],
        [0.0, -0.2613931360335988, -0.9652324219764484, 0.06882781368562169],
        [0.0, 0.9652324219764484, 0.2613931360335988, 0.06882781368562169],
        [0.0, -0.9652324219764484, 0.2613931360335988, 0.06882781368562169],
        [0.0, 0.9652324219764484, -0.2613931360335988, 0.06882781368562169],
        [0.0, -0.9652324219764484, -0.2613931360335988, 0.06882781368562169],
        [0.4990453161796037, 0.1446630744325115, 0.8544158046846588, 0.0750009251580083],
        [-0.4990453161796037, 0.1446630744325115, 0.8544158046846588, 0.0750009251580083],
        [0.4990453161796037, -0.1446630744325115, 0.8544158046846588, 0.0750009251580083],
        [0.4990453161796037, 0.1446630744325115, -0.8544158046846588, 0.0750009251580083],
        [-0.4990453161796037, -0.1446630744325115, 0.8544158046846588, 0.0750009251580083],
        [0.4990453161796037, -0.1446630744325115, -0.8544158046846588, 0.0750009251580083],
        [-0.4990453161796037, 0.1446630744325115, -0.8544158046846588, 0.0750009251580083],
        [-0.4990453161796037, -0.1446630744325115, -0.8544158046846588, 0.0750009251580083],
        [0.1446630744325115, 0.4990453161796037, 0.8544158046846588, 0.0750009251580083],
        [-0.1446630744325115, 0.4990453161796037, 0.8544158046846588, 0.0750009251580083],
        [0.1446630744325115, -0.4990453161796037, 0.8544158046846588, 0.0750009251580083],
        [0.1446630744325115, 0.4990453161796037, -0.8544158046846588, 0.0750009251580083],
        [-0.1446630744325115, -0.4990453161796037, 0.8544158046846588, 0.0750009251580083],
        [0.1446630744325115, -0.4990453161796037, -0.8544158046846588, 0.0750009251580083],
        [-0.1446630744325115, 0.4990453161796037, -0.8544158046846588, 0.0750009251580083],
        [-0.1446630744325115, -0.4990453161796037, -0.8544158046846588, 0.0750009251580083],
        [0.8544158046846588, 0.4990453161796037, 0.1446630744325115, 0.0750009251580083],
        [-0.8544158046846588, 0.4990453161796037, 0.1446630744325115, 0.0750009251580083],
        [0.8544158046846588, -0.4990453161796037, 0.1446630744325115, 0.0750009251580083],
        [0.8544158046846588, 0.4990453161796037, -0.1446630744325115, 0.0750009251580083],
        [-0.8544158046846588, -0.4990453161796037, 0.1446630744325115, 0.0750009251580083],
        [0.8544158046846588, -0.4990453161796037, -0.1446630744325115, 0.0750009251580083],
        [-0.8544158046846588, 0.4990453161796037, -0.1446630744325115, 0.0750009251580083],
        [-0.8544158046846588, -0.4990453161796037, -0.1446630744325115, 0.0750009251580083],
        [0.8544158046846588, 0.1446630744325115, 0.4990453161796037, 0.0750009251580083],
        [-0.8544158046846588, 0.1446630744325115, 0.4990453161796037, 0.0750009251580083],
        [0.8544158046846588, -0.1446630744325115, 0.4990453161796037, 0.0750009251580083],
        [0.8544158046846588, 0.1446630744325115, -0.4990453161796037, 0.0750009251580083],
        [-0.8544158046846588, -0.1446630744325115, 0.4990453161796037, 0.0750009251580083],
        [0.8544158046846588, -0.1446630744325115, -0.4990453161796037, 0.0750009251580083],
        [-0.8544158046846588, 0.1446630744325115, -0.4990453161796037, 0.0750009251580083],
        [-0.8544158046846588, -0.1446630744325115, -0.4990453161796037, 0.0750009251580083],
        [0.4990453161796037, 0.8544158046846588, 0.1446630744325115, 0.0750009251580083],
        [-0.4990453161796037, 0.8544158046846588, 0.1446630744325115, 0.0750009251580083],
        [0.4990453161796037, -0.8544158046846588, 0.1446630744325115, 0.0750009251580083],
        [0.4990453161796037, 0.8544158046846588, -0.1446630744325115, 0.0750009251580083],
        [-0.4990453161796037, -0.8544158046846588, 0.1446630744325115, 0.0750009251580083],
        [0.4990453161796037, -0.8544158046846588, -0.1446630744325115, 0.0750009251580083],
        [-0.4990453161796037, 0.8544158046846588, -0.1446630744325115, 0.0750009251580083],
        [-0.4990453161796037, -0.8544158046846588, -0.1446630744325115, 0.0750009251580083],
        [0.1446630744325115, 0.8544158046846588, 0.4990453161796037, 0.0750009251580083],
        [-0.1446630744325115, 0.8544158046846588, 0.4990453161796037, 0.0750009251580083],
        [0.1446630744325115, -0.8544158046846588, 0.4990453161796037, 0.0750009251580083],
        [0.1446630744325115, 0.8544158046846588, -0.4990453161796037, 0.0750009251580083],
        [-0.1446630744325115, -0.8544158046846588, 0.4990453161796037, 0.0750009251580083],
        [0.1446630744325115, -0.8544158046846588, -0.4990453161796037, 0.0750009251580083],
        [-0.1446630744325115, 0.8544158046846588, -0.4990453161796037, 0.0750009251580083],
        [-0.1446630744325115, -0.8544158046846588, -0.4990453161796037, 0.0750009251580083],
    ]),
    (23, &[
        [1.0, 0.0, 0.0, 0.022397550621038466],
        [-1.0, 0.0, 0.0, 0.022397550621038466],
        [0.0, 1.0, 0.0, 0.022397550621038466],
        [0.0, -1.0, 0.0, 0.022397550621038466],
        [0.0, 0.0, 1.0, 0.022397550621038466],
        [0.0, 0.0, -1.0, 0.022397550621038466],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.07184075893484736],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.07184075893484736],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.07184075893484736],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.07184075893484736],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.07184075893484736],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.07184075893484736],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.07184075893484736],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.07184075893484736],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.07184075893484736],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.07184075893484736],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.07184075893484736],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.07184075893484736],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.07003719860124849],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.07003719860124849],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.07003719860124849],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.07003719860124849],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.07003719860124849],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.07003719860124849],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.07003719860124849],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.07003719860124849],
        [0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.07048105416807013],
        [-0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.07048105416807013],
        [0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.07048105416807013],
        [0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.07048105416807013],
        [-0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.07048105416807013],
        [-0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.07048105416807013],
        [0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.07048105416807013],
        [-0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.07048105416807013],
        [-0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.07048105416807013],
        [0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.07048105416807013],
        [0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.07048105416807013],
        [-0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.07048105416807013],
        [-0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.07048105416807013],
        [0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.07048105416807013],
        [-0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.07048105416807013],
        [0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.07048105416807013],
        [0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.07048105416807013],
        [-0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.07048105416807013],
        [0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.07048105416807013],
        [0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.07048105416807013],
        [-0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.07048105416807013],
        [-0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.07048105416807013],
        [0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.07048105416807013],
        [-0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.07048105416807013],
        [0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.06482032680351046],
        [-0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.06482032680351046],
        [0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.06482032680351046],
        [0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.06482032680351046],
        [-0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.06482032680351046],
        [-0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.06482032680351046],
        [0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.06482032680351046],
        [-0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.06482032680351046],
        [-0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.06482032680351046],
        [0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.06482032680351046],
        [0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.06482032680351046],
        [-0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.06482032680351046],
        [-0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.06482032680351046],
        [0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.06482032680351046],
        [-0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.06482032680351046],
        [0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.06482032680351046],
        [0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.06482032680351046],
        [-0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.06482032680351046],
        [0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.06482032680351046],
        [0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.06482032680351046],
        [-0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.06482032680351046],
        [-0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.06482032680351046],
        [0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.06482032680351046],
        [-0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.06482032680351046],
        [0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.069350927593711],
        [-0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.069350927593711],
        [0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.069350927593711],
        [0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.069350927593711],
        [-0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.069350927593711],
        [-0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.069350927593711],
        [0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.069350927593711],
        [-0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.069350927593711],
        [-0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.069350927593711],
        [0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.069350927593711],
        [0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.069350927593711],
        [-0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.069350927593711],
        [-0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.069350927593711],
        [0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.069350927593711],
        [-0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.069350927593711],
        [0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.069350927593711],
        [0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.069350927593711],
        [-0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.069350927593711],
        [0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.069350927593711],
        [0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.069350927593711],
        [-0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.069350927593711],
        [-0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.069350927593711],
        [0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.069350927593711],
        [-0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.069350927593711],
        [0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.05160728216651316],
        [-0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.05160728216651316],
        [0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.05160728216651316],
        [0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.05160728216651316],
        [-0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.05160728216651316],
        [-0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.05160728216651316],
        [0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.05160728216651316],
        [-0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.05160728216651316],
        [-0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.05160728216651316],
        [0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.05160728216651316],
        [0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.05160728216651316],
        [-0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.05160728216651316],
        [-0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.05160728216651316],
        [0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.05160728216651316],
        [-0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.05160728216651316],
        [0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.05160728216651316],
        [0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.05160728216651316],
        [-0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.05160728216651316],
        [0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.05160728216651316],
        [0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.05160728216651316],
        [-0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.05160728216651316],
        [-0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.05160728216651316],
        [0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.05160728216651316],
        [-0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.05160728216651316],
        [0.3457702197611283, 0.9383192181375916, 0.0, 0.06348336993464156],
        [-0.3457702197611283, 0.9383192181375916, 0.0, 0.06348336993464156],
        [0.3457702197611283, -0.9383192181375916, 0.0, 0.06348336993464156],
        [-0.3457702197611283, -0.9383192181375916, 0.0, 0.06348336993464156],
        [0.9383192181375916, 0.3457702197611283, 0.0, 0.06348336993464156],
        [-0.9383192181375916, 0.3457702197611283, 0.0, 0.06348336993464156],
        [0.9383192181375916, -0.3457702197611283, 0.0, 0.06348336993464156],
        [-0.9383192181375916, -0.3457702197611283, 0.0, 0.06348336993464156],
        [0.3457702197611283, 0.0, 0.9383192181375916, 0.06348336993464156],
        [-0.3457702197611283, 0.0, 0.9383192181375916, 0.06348336993464156],
        [0.3457702197611283, 0.0, -0.9383192181375916, 0.06348336993464156],
        [-0.3457702197611283, 0.0, -0.9383192181375916, 0.06348336993464156],
        [0.9383192181375916, 0.0, 0.3457702197611283, 0.06348336993464156],
        [-0.9383192181375916, 0.0, 0.3457702197611283, 0.06348336993464156],
        [0.9383192181375916, 0.0, -0.3457702197611283, 0.06348336993464156],
        [-0.9383192181375916, 0.0, -0.3457702197611283, 0.06348336993464156],
        [0.0, 0.3457702197611283, 0.9383192181375916, 0.06348336993464156],
        [0.0, -0.3457702197611283, 0.9383192181375916, 0.06348336993464156],
        [0.0, 0.3457702197611283, -0.9383192181375916, 0.06348336993464156],
        [0.0, -0.3457702197611283, -0.9383192181375916, 0.06348336993464156],
        [0.0, 0.9383192181375916, 0.3457702197611283, 0.06348336993464156],
        [0.0, -0.9383192181375916, 0.3457702197611283, 0.06348336993464156],
        [0.0, 0.9383192181375916, -0.3457702197611283, 0.06348336993464156],
        [0.0, -0.9383192181375916, -0.3457702197611283, 0.06348336993464156],
        [0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.06949515747104322],
        [-0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.06949515747104322],
        [0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.06949515747104322],
        [0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.06949515747104322],
        [-0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.06949515747104322],
        [0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.06949515747104322],
        [-0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.06949515747104322],
        [-0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.06949515747104322],
        [0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.06949515747104322],
        [-0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.06949515747104322],
        [0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.06949515747104322],
        [0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.06949515747104322],
        [-0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.06949515747104322],
        [0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.06949515747104322],
        [-0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.06949515747104322],
        [-0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.06949515747104322],
        [0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.06949515747104322],
        [-0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.06949515747104322],
        [0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.06949515747104322],
        [0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.06949515747104322],
        [-0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.06949515747104322],
        [0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.06949515747104322],
        [-0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.06949515747104322],
        [-0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.06949515747104322],
        [0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.06949515747104322],
        [-0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.06949515747104322],
        [0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.06949515747104322],
        [0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.06949515747104322],
        [-0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.06949515747104322],
        [0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.06949515747104322],
        [-0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.06949515747104322],
        [-0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.06949515747104322],
        [0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.06949515747104322],
        [-0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.06949515747104322],
        [0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.06949515747104322],
        [0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.06949515747104322],
        [-0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.06949515747104322],
        [0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.06949515747104322],
        [-0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.06949515747104322],
        [-0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.06949515747104322],
        [0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.06949515747104322],
        [-0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.06949515747104322],
        [0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.06949515747104322],
        [0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.06949515747104322],
        [-0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.06949515747104322],
        [0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.06949515747104322],
        [-0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.06949515747104322],
        [-0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.06949515747104322],
    ]),
    (29, &[
        [1.0, 0.0, 0.0, 0.010739109397555787],
        [-1.0, 0.0, 0.0, 0.010739109397555787],
        [0.0, 1.0, 0.0, 0.010739109397555787],
        [0.0, -1.0, 0.0, 0.010739109397555787],
        [0.0, 0.0, 1.0, 0.010739109397555787],
        [0.0, 0.0, -1.0, 0.010739109397555787],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.04522786682091873],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.04522786682091873],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.04522786682091873],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.04522786682091873],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.04522786682091873],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.04522786682091873],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.04522786682091873],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.04522786682091873],
        [0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.04335131988095388],
        [-0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.04335131988095388],
        [0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.04335131988095388],
        [0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.04335131988095388],
        [-0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.04335131988095388],
        [-0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.04335131988095388],
        [0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.04335131988095388],
        [-0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.04335131988095388],
        [-0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.04335131988095388],
        [0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.04335131988095388],
        [0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.04335131988095388],
        [-0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.04335131988095388],
        [-0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.04335131988095388],
        [0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.04335131988095388],
        [-0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.04335131988095388],
        [0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.04335131988095388],
        [0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.04335131988095388],
        [-0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.04335131988095388],
        [0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.04335131988095388],
        [0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.04335131988095388],
        [-0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.04335131988095388],
        [-0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.04335131988095388],
        [0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.04335131988095388],
        [-0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.04335131988095388],
        [0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.04529953680846059],
        [-0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.04529953680846059],
        [0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.04529953680846059],
        [0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.04529953680846059],
        [-0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.04529953680846059],
        [-0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.04529953680846059],
        [0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.04529953680846059],
        [-0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.04529953680846059],
        [-0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.04529953680846059],
        [0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.04529953680846059],
        [0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.04529953680846059],
        [-0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.04529953680846059],
        [-0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.04529953680846059],
        [0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.04529953680846059],
        [-0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.04529953680846059],
        [0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.04529953680846059],
        [0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.04529953680846059],
        [-0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.04529953680846059],
        [0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.04529953680846059],
        [0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.04529953680846059],
        [-0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.04529953680846059],
        [-0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.04529953680846059],
        [0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.04529953680846059],
        [-0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.04529953680846059],
        [0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.04494651051683867],
        [-0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.04494651051683867],
        [0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.04494651051683867],
        [0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.04494651051683867],
        [-0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.04494651051683867],
        [-0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.04494651051683867],
        [0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.04494651051683867],
        [-0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.04494651051683867],
        [-0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.04494651051683867],
        [0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.04494651051683867],
        [0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.04494651051683867],
        [-0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.04494651051683867],
        [-0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.04494651051683867],
        [0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.04494651051683867],
        [-0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.04494651051683867],
        [0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.04494651051683867],
        [0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.04494651051683867],
        [-0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.04494651051683867],
        [0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.04494651051683867],
        [0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.04494651051683867],
        [-0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.04494651051683867],
        [-0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.04494651051683867],
        [0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.04494651051683867],
        [-0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.04494651051683867],
        [0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.029557378086976182],
        [-0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.029557378086976182],
        [0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.029557378086976182],
        [0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.029557378086976182],
        [-0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.029557378086976182],
        [-0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.029557378086976182],
        [0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.029557378086976182],
        [-0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.029557378086976182],
        [-0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.029557378086976182],
        [0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.029557378086976182],
        [0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.029557378086976182],
        [-0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.029557378086976182],
        [-0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.029557378086976182],
        [0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.029557378086976182],
        [-0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.029557378086976182],
        [0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.029557378086976182],
        [0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.029557378086976182],
        [-0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.029557378086976182],
        [0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.029557378086976182],
        [0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.029557378086976182],
        [-0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.029557378086976182],
        [-0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.029557378086976182],
        [0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.029557378086976182],
        [-0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.029557378086976182],
        [0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.0390682571589194],
        [-0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.0390682571589194],
        [0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.0390682571589194],
        [0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.0390682571589194],
        [-0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.0390682571589194],
        [-0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.0390682571589194],
        [0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.0390682571589194],
        [-0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.0390682571589194],
        [-0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.0390682571589194],
        [0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.0390682571589194],
        [0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.0390682571589194],
        [-0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.0390682571589194],
        [-0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.0390682571589194],
        [0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.0390682571589194],
        [-0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.0390682571589194],
        [0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.0390682571589194],
        [0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.0390682571589194],
        [-0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.0390682571589194],
        [0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.0390682571589194],
        [0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.0390682571589194],
        [-0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.0390682571589194],
        [-0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.0390682571589194],
        [0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.0390682571589194],
        [-0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.0390682571589194],
        [0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.04586782837866035],
        [-0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.04586782837866035],
        [0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.04586782837866035],
        [0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.04586782837866035],
        [-0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.04586782837866035],
        [-0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.04586782837866035],
        [0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.04586782837866035],
        [-0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.04586782837866035],
        [-0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.04586782837866035],
        [0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.04586782837866035],
        [0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.04586782837866035],
        [-0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.04586782837866035],
        [-0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.04586782837866035],
        [0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.04586782837866035],
        [-0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.04586782837866035],
        [0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.04586782837866035],
        [0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.04586782837866035],
        [-0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.04586782837866035],
        [0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.04586782837866035],
        [0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.04586782837866035],
        [-0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.04586782837866035],
        [-0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.04586782837866035],
        [0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.04586782837866035],
        [-0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.04586782837866035],
        [0.2644152887060663, 0.964408914879206, 0.0, 0.03747725210708425],
        [-0.2644152887060663, 0.964408914879206, 0.0, 0.03747725210708425],
        [0.2644152887060663, -0.964408914879206, 0.0, 0.03747725210708425],
        [-0.2644152887060663, -0.964408914879206, 0.0, 0.03747725210708425],
        [0.964408914879206, 0.2644152887060663, 0.0, 0.03747725210708425],
        [-0.964408914879206, 0.2644152887060663, 0.0, 0.03747725210708425],
        [0.964408914879206, -0.2644152887060663, 0.0, 0.03747725210708425],
        [-0.964408914879206, -0.2644152887060663, 0.0, 0.03747725210708425],
        [0.2644152887060663, 0.0, 0.964408914879206, 0.03747725210708425],
        [-0.2644152887060663, 0.0, 0.964408914879206, 0.03747725210708425],
        [0.2644152887060663, 0.0, -0.964408914879206, 0.03747725210708425],
        [-0.2644152887060663, 0.0, -0.964408914879206, 0.03747725210708425],
        [0.964408914879206, 0.0, 0.2644152887060663, 0.03747725210708425],
        [-0.964408914879206, 0.0, 0.2644152887060663, 0.03747725210708425],
        [0.964408914879206, 0.0, -0.2644152887060663, 0.03747725210708425],
        [-0.964408914879206, 0.0, -0.2644152887060663, 0.03747725210708425],
        [0.0, 0.2644152887060663, 0.964408914879206, 0.03747725210708425],
        [0.0, -0.2644152887060663, 0.964408914879206, 0.03747725210708425],
        [0.0, 0.2644152887060663, -0.964408914879206, 0.03747725210708425],
        [0.0, -0.2644152887060663, -0.964408914879206, 0.03747725210708425],
        [0.0, 0.964408914879206, 0.2644152887060663, 0.03747725210708425],
        [0.0, -0.964408914879206, 0.2644152887060663, 0.03747725210708425],
        [0.0, 0.964408914879206, -0.2644152887060663, 0.03747725210708425],
        [0.0, -0.964408914879206, -0.2644152887060663, 0.03747725210708425],
        [0.5718955891878961, 0.8203264198277593, 0.0, 0.045249250350174325],
        [-0.5718955891878961, 0.8203264198277593, 0.0, 0.045249250350174325],
        [0.5718955891878961, -0.8203264198277593, 0.0, 0.045249250350174325],
        [-0.5718955891878961, -0.8203264198277593, 0.0, 0.045249250350174325],
        [0.8203264198277593, 0.5718955891878961, 0.0, 0.045249250350174325],
        [-0.8203264198277593, 0.5718955891878961, 0.0, 0.045249250350174325],
        [0.8203264198277593, -0.5718955891878961, 0.0, 0.045249250350174325],
        [-0.8203264198277593, -0.5718955891878961, 0.0, 0.045249250350174325],
        [0.5718955891878961, 0.0, 0.8203264198277593, 0.045249250350174325],
        [-0.5718955891878961, 0.0, 0.8203264198277593, 0.045249250350174325],
        [0.5718955891878961, 0.0, -0.8203264198277593, 0.045249250350174325],
        [-0.5718955891878961, 0.0, -0.8203264198277593, 0.045249250350174325],
        [0.8203264198277593, 0.0, 0.5718955891878961, 0.045249250350174325],
        [-0.8203264198277593, 0.0, 0.5718955891878961, 0.045249250350174325],
        [0.8203264198277593, 0.0, -0.5718955891878961, 0.045249250350174325],
        [-0.8203264198277593, 0.0, -0.5718955891878961, 0.045249250350174325],
        [0.0, 0.5718955891878961, 0.8203264198277593, 0.045249250350174325],
        [0.0, -0.5718955891878961, 0.8203264198277593, 0.045249250350174325],
        [0.0, 0.5718955891878961, -0.8203264198277593, 0.045249250350174325],
        [0.0, -0.5718955891878961, -0.8203264198277593, 0.045249250350174325],
        [0.0, 0.8203264198277593, 0.5718955891878961, 0.045249250350174325],
        [0.0, -0.8203264198277593, 0.5718955891878961, 0.045249250350174325],
        [0.0, 0.8203264198277593, -0.5718955891878961, 0.045249250350174325],
        [0.0, -0.8203264198277593, -0.5718955891878961, 0.045249250350174325],
        [0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.044881302269213164],
        [-0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.044881302269213164],
        [0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.044881302269213164],
        [0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.044881302269213164],
        [-0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.044881302269213164],
        [0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.044881302269213164],
        [-0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.044881302269213164],
        [-0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.044881302269213164],
        [0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.044881302269213164],
        [-0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.044881302269213164],
        [0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.044881302269213164],
        [0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.044881302269213164],
        [-0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.044881302269213164],
        [0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.044881302269213164],
        [-0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.044881302269213164],
        [-0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.044881302269213164],
        [0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.044881302269213164],
        [-0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.044881302269213164],
        [0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.044881302269213164],
        [0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.044881302269213164],
        [-0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.044881302269213164],
        [0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.044881302269213164],
        [-0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.044881302269213164],
        [-0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.044881302269213164],
        [0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.044881302269213164],
        [-0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.044881302269213164],
        [0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.044881302269213164],
        [0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.044881302269213164],
        [-0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.044881302269213164],
        [0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.044881302269213164],
        [-0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.044881302269213164],
        [-0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.044881302269213164],
        [0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.044881302269213164],
        [-0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.044881302269213164],
        [0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.044881302269213164],
        [0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.044881302269213164],
        [-0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.044881302269213164],
        [0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.044881302269213164],
        [-0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.044881302269213164],
        [-0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.044881302269213164],
        [0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.044881302269213164],
        [-0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.044881302269213164],
        [0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.044881302269213164],
        [0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.044881302269213164],
        [-0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.044881302269213164],
        [0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.044881302269213164],
        [-0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.044881302269213164],
        [-0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.044881302269213164],
        [0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.0426290524077215],
        [-0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.0426290524077215],
        [0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.0426290524077215],
        [0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.0426290524077215],
        [-0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.0426290524077215],
        [0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.0426290524077215],
        [-0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.0426290524077215],
        [-0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.0426290524077215],
        [0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.0426290524077215],
        [-0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.0426290524077215],
        [0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.0426290524077215],
        [0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.0426290524077215],
        [-0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.0426290524077215],
        [0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.0426290524077215],
        [-0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.0426290524077215],
        [-0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.0426290524077215],
        [0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.0426290524077215],
        [-0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.0426290524077215],
        [0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.0426290524077215],
        [0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.0426290524077215],
        [-0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.0426290524077215],
        [0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.0426290524077215],
        [-0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.0426290524077215],
        [-0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.0426290524077215],
        [0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.0426290524077215],
        [-0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.0426290524077215],
        [0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.0426290524077215],
        [0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.0426290524077215],
        [-0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.0426290524077215],
        [0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.0426290524077215],
        [-0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.0426290524077215],
        [-0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.0426290524077215],
        [0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.0426290524077215],
        [-0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.0426290524077215],
        [0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.0426290524077215],
        [0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.0426290524077215],
        [-0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.0426290524077215],
        [0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.0426290524077215],
        [-0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.0426290524077215],
        [-0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.0426290524077215],
        [0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.0426290524077215],
        [-0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.0426290524077215],
        [0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.0426290524077215],
        [0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.0426290524077215],
        [-0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.0426290524077215],
        [0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.0426290524077215],
        [-0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.0426290524077215],
        [-0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.0426290524077215],
    ]),
    (31, &[
        [1.0, 0.0, 0.0, 0.03778452231568862],
        [-1.0, 0.0, 0.0, 0.03778452231568862],
        [0.0, 1.0, 0.0, 0.03778452231568862],
        [0.0, -1.0, 0.0, 0.03778452231568862],
        [0.0, 0.0, 1.0, 0.03778452231568862],
        [0.0, 0.0, -1.0, 0.03778452231568862],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.038335318858294616],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.038335318858294616],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.038335318858294616],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.038335318858294616],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.038335318858294616],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.038335318858294616],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.038335318858294616],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.038335318858294616],
        [0.7068965463912316, 0.7068965463912316, 0.024383301669355525, 0.020371401211874047],
        [-0.7068965463912316, 0.7068965463912316, 0.024383301669355525, 0.020371401211874047],
        [0.7068965463912316, -0.7068965463912316, 0.024383301669355525, 0.020371401211874047],
        [0.7068965463912316, 0.7068965463912316, -0.024383301669355525, 0.020371401211874047],
        [-0.7068965463912316, -0.7068965463912316, 0.024383301669355525, 0.020371401211874047],
        [-0.7068965463912316, 0.7068965463912316, -0.024383301669355525, 0.020371401211874047],
        [0.7068965463912316, -0.7068965463912316, -0.024383301669355525, 0.020371401211874047],
        [-0.7068965463912316, -0.7068965463912316, -0.024383301669355525, 0.020371401211874047],
        [-0.7068965463912316, 0.024383301669355525, 0.7068965463912316, 0.020371401211874047],
        [0.7068965463912316, -0.024383301669355525, 0.7068965463912316, 0.020371401211874047],
        [0.7068965463912316, 0.024383301669355525, -0.7068965463912316, 0.020371401211874047],
        [-0.7068965463912316, -0.024383301669355525, 0.7068965463912316, 0.020371401211874047],
        [-0.7068965463912316, 0.024383301669355525, -0.7068965463912316, 0.020371401211874047],
        [0.7068965463912316, -0.024383301669355525, -0.7068965463912316, 0.020371401211874047],
        [-0.7068965463912316, -0.024383301669355525, -0.7068965463912316, 0.020371401211874047],
        [0.7068965463912316, 0.024383301669355525, 0.7068965463912316, 0.020371401211874047],
        [0.024383301669355525, 0.7068965463912316, 0.7068965463912316, 0.020371401211874047],
        [-0.024383301669355525, 0.7068965463912316, 0.7068965463912316, 0.020371401211874047],
        [0.024383301669355525, -0.7068965463912316, 0.7068965463912316, 0.020371401211874047],
        [0.024383301669355525, 0.7068965463912316, -0.7068965463912316, 0.020371401211874047],
        [-0.024383301669355525, -0.7068965463912316, 0.7068965463912316, 0.020371401211874047],
        [-0.024383301669355525, 0.7068965463912316, -0.7068965463912316, 0.020371401211874047],
        [0.024383301669355525, -0.7068965463912316, -0.7068965463912316, 0.020371401211874047],
        [-0.024383301669355525, -0.7068965463912316, -0.7068965463912316, 0.020371401211874047],
        [0.4794682625712025, 0.4794682625712025, 0.7349968505877456, 0.037770758815405106],
        [-0.4794682625712025, 0.4794682625712025, 0.7349968505877456, 0.037770758815405106],
        [0.4794682625712025, -0.4794682625712025, 0.7349968505877456, 0.037770758815405106],
        [0.4794682625712025, 0.4794682625712025, -0.7349968505877456, 0.037770758815405106],
        [-0.4794682625712025, -0.4794682625712025, 0.7349968505877456, 0.037770758815405106],
        [-0.4794682625712025, 0.4794682625712025, -0.7349968505877456, 0.037770758815405106],
        [0.4794682625712025, -0.4794682625712025, -0.7349968505877456, 0.037770758815405106],
        [-0.4794682625712025, -0.4794682625712025, -0.7349968505877456, 0.037770758815405106],
        [-0.4794682625712025, 0.7349968505877456, 0.4794682625712025, 0.037770758815405106],
        [0.4794682625712025, -0.7349968505877456, 0.4794682625712025, 0.037770758815405106],
        [0.4794682625712025, 0.7349968505877456, -0.4794682625712025, 0.037770758815405106],
        [-0.4794682625712025, -0.7349968505877456, 0.4794682625712025, 0.037770758815405106],
        [-0.4794682625712025, 0.7349968505877456, -0.4794682625712025, 0.037770758815405106],
        [0.4794682625712025, -0.7349968505877456, -0.4794682625712025, 0.037770758815405106],
        [-0.4794682625712025, -0.7349968505877456, -0.4794682625712025, 0.037770758815405106],
        [0.4794682625712025, 0.7349968505877456, 0.4794682625712025, 0.037770758815405106],
        [0.7349968505877456, 0.4794682625712025, 0.4794682625712025, 0.037770758815405106],
        [-0.7349968505877456, 0.4794682625712025, 0.4794682625712025, 0.037770758815405106],
        [0.7349968505877456, -0.4794682625712025, 0.4794682625712025, 0.037770758815405106],
        [0.7349968505877456, 0.4794682625712025, -0.4794682625712025, 0.037770758815405106],
        [-0.7349968505877456, -0.4794682625712025, 0.4794682625712025, 0.037770758815405106],
        [-0.7349968505877456, 0.4794682625712025, -0.4794682625712025, 0.037770758815405106],
        [0.7349968505877456, -0.4794682625712025, -0.4794682625712025, 0.037770758815405106],
        [-0.7349968505877456, -0.4794682625712025, -0.4794682625712025, 0.037770758815405106],
        [0.1927533154878019, 0.1927533154878019, 0.9621290551360144, 0.03758592063240899],
        [-0.1927533154878019, 0.1927533154878019, 0.9621290551360144, 0.03758592063240899],
        [0.1927533154878019, -0.1927533154878019, 0.9621290551360144, 0.03758592063240899],
        [0.1927533154878019, 0.1927533154878019, -0.9621290551360144, 0.03758592063240899],
        [-0.1927533154878019, -0.1927533154878019, 0.9621290551360144, 0.03758592063240899],
        [-0.1927533154878019, 0.1927533154878019, -0.9621290551360144, 0.03758592063240899],
        [0.1927533154878019, -0.1927533154878019, -0.9621290551360144, 0.03758592063240899],
        [-0.1927533154878019, -0.1927533154878019, -0.9621290551360144, 0.03758592063240899],
        [-0.1927533154878019, 0.9621290551360144, 0.1927533154878019, 0.03758592063240899],
        [0.1927533154878019, -0.9621290551360144, 0.1927533154878019, 0.03758592063240899],
        [0.1927533154878019, 0.9621290551360144, -0.1927533154878019, 0.03758592063240899],
        [-0.1927533154878019, -0.9621290551360144, 0.1927533154878019, 0.03758592063240899],
        [-0.1927533154878019, 0.9621290551360144, -0.1927533154878019, 0.03758592063240899],
        [0.1927533154878019, -0.9621290551360144, -0.1927533154878019, 0.03758592063240899],
        [-0.1927533154878019, -0.9621290551360144, -0.1927533154878019, 0.03758592063240899],
        [0.1927533154878019, 0.9621290551360144, 0.1927533154878019, 0.03758592063240899],
        [0.9621290551360144, 0.1927533154878019, 0.1927533154878019, 0.03758592063240899],
        [-0.9621290551360144, 0.1927533154878019, 0.1927533154878019, 0.03758592063240899],
        [0.9621290551360144, -0.1927533154878019, 0.1927533154878019, 0.03758592063240899],
        [0.9621290551360144, 0.1927533154878019, -0.1927533154878019, 0.03758592063240899],
        [-0.9621290551360144, -0.1927533154878019, 0.1927533154878019, 0.03758592063240899],
        [-0.9621290551360144, 0.1927533154878019, -0.1927533154878019, 0.03758592063240899],
        [0.9621290551360144, -0.1927533154878019, -0.1927533154878019, 0.03758592063240899],
        [-0.9621290551360144, -0.1927533154878019, -0.1927533154878019, 0.03758592063240899],
        [0.6930357961327123, 0.6930357961327123, 0.19850131122336542, 0.03747506154911825],
        [-0.6930357961327123, 0.6930357961327123, 0.19850131122336542, 0.03747506154911825],
        [0.6930357961327123, -0.6930357961327123, 0.19850131122336542, 0.03747506154911825],
        [0.6930357961327123, 0.6930357961327123, -0.19850131122336542, 0.03747506154911825],
        [-0.6930357961327123, -0.6930357961327123, 0.19850131122336542, 0.03747506154911825],
        [-0.6930357961327123, 0.6930357961327123, -0.19850131122336542, 0.03747506154911825],
        [0.6930357961327123, -0.6930357961327123, -0.19850131122336542, 0.03747506154911825],
        [-0.6930357961327123, -0.6930357961327123, -0.19850131122336542, 0.03747506154911825],
        [-0.6930357961327123, 0.19850131122336542, 0.6930357961327123, 0.03747506154911825],
        [0.6930357961327123, -0.19850131122336542, 0.6930357961327123, 0.03747506154911825],
        [0.6930357961327123, 0.19850131122336542, -0.6930357961327123, 0.03747506154911825],
        [-0.6930357961327123, -0.19850131122336542, 0.6930357961327123, 0.03747506154911825],
        [-0.6930357961327123, 0.19850131122336542, -0.6930357961327123, 0.03747506154911825],
        [0.6930357961327123, -0.19850131122336542, -0.6930357961327123, 0.03747506154911825],
        [-0.6930357961327123, -0.19850131122336542, -0.6930357961327123, 0.03747506154911825],
        [0.6930357961327123, 0.19850131122336542, 0.6930357961327123, 0.03747506154911825],
        [0.19850131122336542, 0.6930357961327123, 0.6930357961327123, 0.03747506154911825],
        [-0.19850131122336542, 0.6930357961327123, 0.6930357961327123, 0.03747506154911825],
        [0.19850131122336542, -0.6930357961327123, 0.6930357961327123, 0.03747506154911825],
        [0.19850131122336542, 0.6930357961327123, -0.6930357961327123, 0.03747506154911825],
        [-0.19850131122336542, -0.6930357961327123, 0.6930357961327123, 0.03747506154911825],
        [-0.19850131122336542, 0.6930357961327123, -0.6930357961327123, 0.03747506154911825],
        [0.19850131122336542, -0.6930357961327123, -0.6930357961327123, 0.03747506154911825],
        [-0.19850131122336542, -0.6930357961327123, -0.6930357961327123, 0.03747506154911825],
        [0.3608302115520091, 0.3608302115520091, 0.860001812127547, 0.03420018485683569],
        [-0.3608302115520091, 0.3608302115520091, 0.860001812127547, 0.03420018485683569],
        [0.3608302115520091, -0.3608302115520091, 0.860001812127547, 0.03420018485683569],
        [0.3608302115520091, 0.3608302115520091, -0.860001812127547, 0.03420018485683569],
        [-0.3608302115520091, -0.3608302115520091, 0.860001812127547, 0.03420018485683569],
        [-0.3608302115520091, 0.3608302115520091, -0.860001812127547, 0.03420018485683569],
        [0.3608302115520091, -0.3608302115520091, -0.860001812127547, 0.03420018485683569],
        [-0.3608302115520091, -0.3608302115520091, -0.860001812127547, 0.03420018485683569],
        [-0.3608302115520091, 0.860001812127547, 0.3608302115520091, 0.03420018485683569],
        [0.3608302115520091, -0.860001812127547, 0.3608302115520091, 0.03420018485683569],
        [0.3608302115520091, 0.860001812127547, -0.3608302115520091, 0.03420018485683569],
        [-0.3608302115520091, -0.860001812127547, 0.3608302115520091, 0.03420018485683569],
        [-0.3608302115520091, 0.860001812127547, -0.3608302115520091, 0.03420018485683569],
        [0.3608302115520091, -0.860001812127547, -0.3608302115520091, 0.03420018485683569],
        [-0.3608302115520091, -0.860001812127547, -0.3608302115520091, 0.03420018485683569],
        [0.3608302115520091, 0.860001812127547, 0.3608302115520091, 0.03420018485683569],
        [0.860001812127547, 0.3608302115520091, 0.3608302115520091, 0.03420018485683569],
        [-0.860001812127547, 0.3608302115520091, 0.3608302115520091, 0.03420018485683569],
        [0.860001812127547, -0.3608302115520091, 0.3608302115520091, 0.03420018485683569],
        [0.860001812127547, 0.3608302115520091, -0.3608302115520091, 0.03420018485683569],
        [-0.860001812127547, -0.3608302115520091, 0.3608302115520091, 0.03420018485683569],
        [-0.860001812127547, 0.3608302115520091, -0.3608302115520091, 0.03420018485683569],
        [0.860001812127547, -0.3608302115520091, -0.3608302115520091, 0.03420018485683569],
        [-0.860001812127547, -0.3608302115520091, -0.3608302115520091, 0.03420018485683569],
        [0.6498486161496169, 0.6498486161496169, 0.3941998886058389, 0.03812025862193428],
        [-0.6498486161496169, 0.6498486161496169, 0.3941998886058389, 0.03812025862193428],
        [0.6498486161496169, -0.6498486161496169, 0.3941998886058389, 0.03812025862193428],
        [0.6498486161496169, 0.6498486161496169, -0.3941998886058389, 0.03812025862193428],
        [-0.6498486161496169, -0.6498486161496169, 0.3941998886058389, 0.03812025862193428],
        [-0.6498486161496169, 0.6498486161496169, -0.3941998886058389, 0.03812025862193428],
        [0.6498486161496169, -0.6498486161496169, -0.3941998886058389, 0.03812025862193428],
        [-0.6498486161496169, -0.6498486161496169, -0.3941998886058389, 0.03812025862193428],
        [-0.6498486161496169, 0.3941998886058389, 0.6498486161496169, 0.03812025862193428],
        [0.6498486161496169, -0.3941998886058389, 0.6498486161496169, 0.03812025862193428],
        [0.6498486161496169, 0.3941998886058389, -0.6498486161496169, 0.03812025862193428],
        [-0.6498486161496169, -0.3941998886058389, 0.6498486161496169, 0.03812025862193428],
        [-0.6498486161496169, 0.3941998886058389, -0.6498486161496169, 0.03812025862193428],
        [0.6498486161496169, -0.3941998886058389, -0.6498486161496169, 0.03812025862193428],
        [-0.6498486161496169, -0.3941998886058389, -0.6498486161496169, 0.03812025862193428],
        [0.6498486161496169, 0.3941998886058389, 0.6498486161496169, 0.03812025862193428],
        [0.3941998886058389, 0.6498486161496169, 0.6498486161496169, 0.03812025862193428],
        [-0.3941998886058389, 0.6498486161496169, 0.6498486161496169, 0.03812025862193428],
        [0.3941998886058389, -0.6498486161496169, 0.6498486161496169, 0.03812025862193428],
        [0.3941998886058389, 0.6498486161496169, -0.6498486161496169, 0.03812025862193428],
        [-0.3941998886058389, -0.6498486161496169, 0.6498486161496169, 0.03812025862193428],
        [-0.3941998886058389, 0.6498486161496169, -0.6498486161496169, 0.03812025862193428],
        [0.3941998886058389, -0.6498486161496169, -0.6498486161496169, 0.03812025862193428],
        [-0.3941998886058389, -0.6498486161496169, -0.6498486161496169, 0.03812025862193428],
        [0.1932945013230339, 0.9811407828432572, 0.0, 0.03779900890017291],
        [-0.1932945013230339, 0.9811407828432572, 0.0, 0.03779900890017291],
        [0.1932945013230339, -0.9811407828432572, 0.0, 0.03779900890017291],
        [-0.1932945013230339, -0.9811407828432572, 0.0, 0.03779900890017291],
        [0.9811407828432572, 0.1932945013230339, 0.0, 0.03779900890017291],
        [-0.9811407828432572, 0.1932945013230339, 0.0, 0.03779900890017291],
        [0.9811407828432572, -0.1932945013230339, 0.0, 0.03779900890017291],
        [-0.9811407828432572, -0.1932945013230339, 0.0, 0.03779900890017291],
        [0.1932945013230339, 0.0, 0.9811407828432572, 0.03779900890017291],
        [-0.1932945013230339, 0.0, 0.9811407828432572, 0.03779900890017291],
        [0.1932945013230339, 0.0, -0.9811407828432572, 0.03779900890017291],
        [-0.1932945013230339, 0.0, -0.9811407828432572, 0.03779900890017291],
        [0.9811407828432572, 0.0, 0.1932945013230339, 0.03779900890017291],
        [-0.9811407828432572, 0.0, 0.1932945013230339, 0.03779900890017291],
        [0.9811407828432572, 0.0, -0.1932945013230339, 0.03779900890017291],
        [-0.9811407828432572, 0.0, -0.1932945013230339, 0.03779900890017291],
        [0.0, 0.1932945013230339, 0.9811407828432572, 0.03779900890017291],
        [0.0, -0.1932945013230339, 0.9811407828432572, 0.03779900890017291],
        [0.0, 0.1932945013230339, -0.9811407828432572, 0.03779900890017291],
        [0.0, -0.1932945013230339, -0.9811407828432572, 0.03779900890017291],
        [0.0, 0.9811407828432572, 0.1932945013230339, 0.03779900890017291],
        [0.0, -0.9811407828432572, 0.1932945013230339, 0.03779900890017291],
        [0.0, 0.9811407828432572, -0.1932945013230339, 0.03779900890017291],
        [0.0, -0.9811407828432572, -0.1932945013230339, 0.03779900890017291],
        [0.3800494919899303, 0.924966152698679, 0.0, 0.03621583529945751],
        [-0.3800494919899303, 0.924966152698679, 0.0, 0.03621583529945751],
        [0.3800494919899303, -0.924966152698679, 0.0, 0.03621583529945751],
        [-0.3800494919899303, -0.924966152698679, 0.0, 0.03621583529945751],
        [0.924966152698679, 0.3800494919899303, 0.0, 0.03621583529945751],
        [-0.924966152698679, 0.3800494919899303, 0.0, 0.03621583529945751],
        [0.924966152698679, -0.3800494919899303, 0.0, 0.03621583529945751],
        [-0.924966152698679, -0.3800494919899303, 0.0, 0.03621583529945751],
        [0.3800494919899303, 0.0, 0.924966152698679, 0.03621583529945751],
        [-0.3800494919899303, 0.0, 0.924966152698679, 0.03621583529945751],
        [0.3800494919899303, 0.0, -0.924966152698679, 0.03621583529945751],
        [-0.3800494919899303, 0.0, -0.924966152698679, 0.03621583529945751],
        [0.924966152698679, 0.0, 0.3800494919899303, 0.03621583529945751],
        [-0.924966152698679, 0.0, 0.3800494919899303, 0.03621583529945751],
        [0.924966152698679, 0.0, -0.3800494919899303, 0.03621583529945751],
        [-0.924966152698679, 0.0, -0.3800494919899303, 0.03621583529945751],
        [0.0, 0.3800494919899303, 0.924966152698679, 0.03621583529945751],
        [0.0, -0.3800494919899303, 0.924966152698679, 0.03621583529945751],
        [0.0, 0.3800494919899303, -0.924966152698679, 0.03621583529945751],
        [0.0, -0.3800494919899303, -0.924966152698679, 0.03621583529945751],
        [0.0, 0.924966152698679, 0.3800494919899303, 0.03621583529945751],
        [0.0, -0.924966152698679, 0.3800494919899303, 0.03621583529945751],
        [0.0, 0.924966152698679, -0.3800494919899303, 0.03621583529945751],
        [0.0, -0.924966152698679, -0.3800494919899303, 0.03621583529945751],
        [0.2899558825499574, 0.7934537856582315, 0.5351230477182762, 0.03717581834486352],
        [-0.2899558825499574, 0.7934537856582315, 0.5351230477182762, 0.03717581834486352],
        [0.2899558825499574, -0.7934537856582315, 0.5351230477182762, 0.03717581834486352],
        [0.2899558825499574, 0.7934537856582315, -0.5351230477182762, 0.03717581834486352],
        [-0.2899558825499574, -0.7934537856582315, 0.5351230477182762, 0.03717581834486352],
        [0.2899558825499574, -0.7934537856582315, -0.5351230477182762, 0.03717581834486352],
        [-0.2899558825499574, 0.7934537856582315, -0.5351230477182762, 0.03717581834486352],
        [-0.2899558825499574, -0.7934537856582315, -0.5351230477182762, 0.03717581834486352],
        [0.7934537856582315, 0.2899558825499574, 0.5351230477182762, 0.03717581834486352],
        [-0.7934537856582315, 0.2899558825499574, 0.5351230477182762, 0.03717581834486352],
        [0.7934537856582315, -0.2899558825499574, 0.5351230477182762, 0.03717581834486352],
        [0.7934537856582315, 0.2899558825499574, -0.5351230477182762, 0.03717581834486352],
        [-0.7934537856582315, -0.2899558825499574, 0.5351230477182762, 0.03717581834486352],
        [0.7934537856582315, -0.2899558825499574, -0.5351230477182762, 0.03717581834486352],
        [-0.7934537856582315, 0.2899558825499574, -0.5351230477182762, 0.03717581834486352],
        [-0.7934537856582315, -0.2899558825499574, -0.5351230477182762, 0.03717581834486352],
        [0.5351230477182762, 0.2899558825499574, 0.7934537856582315, 0.03717581834486352],
        [-0.5351230477182762, 0.2899558825499574, 0.7934537856582315, 0.03717581834486352],
        [0.5351230477182762, -0.2899558825499574, 0.7934537856582315, 0.03717581834486352],
        [0.5351230477182762, 0.2899558825499574, -0.7934537856582315, 0.03717581834486352],
        [-0.5351230477182762, -0.2899558825499574, 0.7934537856582315, 0.03717581834486352],
        [0.5351230477182762, -0.2899558825499574, -0.7934537856582315, 0.03717581834486352],
        [-0.5351230477182762, 0.2899558825499574, -0.7934537856582315, 0.03717581834486352],
        [-0.5351230477182762, -0.2899558825499574, -0.7934537856582315, 0.03717581834486352],
        [0.5351230477182762, 0.7934537856582315, 0.2899558825499574, 0.03717581834486352],
        [-0.5351230477182762, 0.7934537856582315, 0.2899558825499574, 0.03717581834486352],
        [0.5351230477182762, -0.7934537856582315, 0.2899558825499574, 0.03717581834486352],
        [0.5351230477182762, 0.7934537856582315, -0.2899558825499574, 0.03717581834486352],
        [-0.5351230477182762, -0.7934537856582315, 0.2899558825499574, 0.03717581834486352],
        [0.5351230477182762, -0.7934537856582315, -0.2899558825499574, 0.03717581834486352],
        [-0.5351230477182762, 0.7934537856582315, -0.2899558825499574, 0.03717581834486352],
        [-0.5351230477182762, -0.7934537856582315, -0.2899558825499574, 0.03717581834486352],
        [0.2899558825499574, 0.5351230477182762, 0.7934537856582315, 0.03717581834486352],
        [-0.2899558825499574, 0.5351230477182762, 0.7934537856582315, 0.03717581834486352],
        [0.2899558825499574, -0.5351230477182762, 0.7934537856582315, 0.03717581834486352],
        [0.2899558825499574, 0.5351230477182762, -0.7934537856582315, 0.03717581834486352],
        [-0.2899558825499574, -0.5351230477182762, 0.7934537856582315, 0.03717581834486352],
        [0.2899558825499574, -0.5351230477182762, -0.7934537856582315, 0.03717581834486352],
        [-0.2899558825499574, 0.5351230477182762, -0.7934537856582315, 0.03717581834486352],
        [-0.2899558825499574, -0.5351230477182762, -0.7934537856582315, 0.03717581834486352],
        [0.7934537856582315, 0.5351230477182762, 0.2899558825499574, 0.03717581834486352],
        [-0.7934537856582315, 0.5351230477182762, 0.2899558825499574, 0.03717581834486352],
        [0.7934537856582315, -0.5351230477182762, 0.2899558825499574, 0.03717581834486352],
        [0.7934537856582315, 0.5351230477182762, -0.2899558825499574, 0.03717581834486352],
        [-0.7934537856582315, -0.5351230477182762, 0.2899558825499574, 0.03717581834486352],
        [0.7934537856582315, -0.5351230477182762, -0.2899558825499574, 0.03717581834486352],
        [-0.7934537856582315, 0.5351230477182762, -0.2899558825499574, 0.03717581834486352],
        [-0.7934537856582315, -0.5351230477182762, -0.2899558825499574, 0.03717581834486352],
        [0.09684121455103957, 0.8280801506686862, 0.5521820743493993, 0.03815175284444799],
        [-0.09684121455103957, 0.8280801506686862, 0.5521820743493993, 0.03815175284444799],
        [0.09684121455103957, -0.8280801506686862, 0.5521820743493993, 0.03815175284444799],
        [0.09684121455103957, 0.8280801506686862, -0.5521820743493993, 0.03815175284444799],
        [-0.09684121455103957, -0.8280801506686862, 0.5521820743493993, 0.03815175284444799],
        [0.09684121455103957, -0.8280801506686862, -0.5521820743493993, 0.03815175284444799],
        [-0.09684121455103957, 0.8280801506686862, -0.5521820743493993, 0.03815175284444799],
        [-0.09684121455103957, -0.8280801506686862, -0.5521820743493993, 0.03815175284444799],
        [0.8280801506686862, 0.09684121455103957, 0.5521820743493993, 0.03815175284444799],
        [-0.8280801506686862, 0.09684121455103957, 0.5521820743493993, 0.03815175284444799],
        [0.8280801506686862, -0.09684121455103957, 0.5521820743493993, 0.03815175284444799],
        [0.8280801506686862, 0.09684121455103957, -0.5521820743493993, 0.03815175284444799],
        [-0.8280801506686862, -0.09684121455103957, 0.5521820743493993, 0.03815175284444799],
        [0.8280801506686862, -0.09684121455103957, -0.5521820743493993, 0.03815175284444799],
        [-0.8280801506686862, 0.09684121455103957, -0.5521820743493993, 0.03815175284444799],
        [-0.8280801506686862, -0.09684121455103957, -0.5521820743493993, 0.03815175284444799],
        [0.5521820743493993, 0.09684121455103957, 0.8280801506686862, 0.03815175284444799],
        [-0.5521820743493993, 0.09684121455103957, 0.8280801506686862, 0.03815175284444799],
        [0.5521820743493993, -0.09684121455103957, 0.8280801506686862, 0.03815175284444799],
        [0.5521820743493993, 0.09684121455103957, -0.8280801506686862, 0.03815175284444799],
        [-0.5521820743493993, -0.09684121455103957, 0.8280801506686862, 0.03815175284444799],
        [0.5521820743493993, -0.09684121455103957, -0.8280801506686862, 0.03815175284444799],
        [-0.5521820743493993, 0.09684121455103957, -0.8280801506686862, 0.03815175284444799],
        [-0.5521820743493993, -0.09684121455103957, -0.8280801506686862, 0.03815175284444799],
        [0.5521820743493993, 0.8280801506686862, 0.09684121455103957, 0.03815175284444799],
        [-0.5521820743493993, 0.8280801506686862, 0.09684121455103957, 0.03815175284444799],
        [0.5521820743493993, -0.8280801506686862, 0.09684121455103957, 0.03815175284444799],
        [0.5521820743493993, 0.8280801506686862, -0.09684121455103957, 0.03815175284444799],
        [-0.5521820743493993, -0.8280801506686862, 0.09684121455103957, 0.03815175284444799],
        [0.5521820743493993, -0.8280801506686862, -0.09684121455103957, 0.03815175284444799],
        [-0.5521820743493993, 0.8280801506686862, -0.09684121455103957, 0.03815175284444799],
        [-0.5521820743493993, -0.8280801506686862, -0.09684121455103957, 0.03815175284444799],
        [0.09684121455103957, 0.5521820743493993, 0.8280801506686862, 0.03815175284444799],
        [-0.09684121455103957, 0.5521820743493993, 0.8280801506686862, 0.03815175284444799],
        [0.09684121455103957, -0.5521820743493993, 0.8280801506686862, 0.03815175284444799],
        [0.09684121455103957, 0.5521820743493993, -0.8280801506686862, 0.03815175284444799],
        [-0.09684121455103957, -0.5521820743493993, 0.8280801506686862, 0.03815175284444799],
        [0.09684121455103957, -0.5521820743493993, -0.8280801506686862, 0.03815175284444799],
        [-0.09684121455103957, 0.5521820743493993, -0.8280801506686862, 0.03815175284444799],
        [-0.09684121455103957, -0.5521820743493993, -0.8280801506686862, 0.03815175284444799],
        [0.8280801506686862, 0.5521820743493993, 0.09684121455103957, 0.03815175284444799],
        [-0.8280801506686862, 0.5521820743493993, 0.09684121455103957, 0.03815175284444799],
        [0.8280801506686862, -0.5521820743493993, 0.09684121455103957, 0.03815175284444799],
        [0.8280801506686862, 0.5521820743493993, -0.09684121455103957, 0.03815175284444799],
        [-0.8280801506686862, -0.5521820743493993, 0.09684121455103957, 0.03815175284444799],
        [0.8280801506686862, -0.5521820743493993, -0.09684121455103957, 0.03815175284444799],
        [-0.8280801506686862, 0.5521820743493993, -0.09684121455103957, 0.03815175284444799],
        [-0.8280801506686862, -0.5521820743493993, -0.09684121455103957, 0.03815175284444799],
        [0.1833434647041659, 0.9074658265305127, 0.37800918987448673, 0.03559031656705768],
        [-0.1833434647041659, 0.9074658265305127, 0.37800918987448673, 0.03559031656705768],
        [0.1833434647041659, -0.9074658265305127, 0.37800918987448673, 0.03559031656705768],
        [0.1833434647041659, 0.9074658265305127, -0.37800918987448673, 0.03559031656705768],
        [-0.1833434647041659, -0.9074658265305127, 0.37800918987448673, 0.03559031656705768],
        [0.1833434647041659, -0.9074658265305127, -0.37800918987448673, 0.03559031656705768],
        [-0.1833434647041659, 0.9074658265305127, -0.37800918987448673, 0.03559031656705768],
        [-0.1833434647041659, -0.9074658265305127, -0.37800918987448673, 0.03559031656705768],
        [0.9074658265305127, 0.1833434647041659, 0.37800918987448673, 0.03559031656705768],
        [-0.9074658265305127, 0.1833434647041659, 0.37800918987448673, 0.03559031656705768],
        [0.9074658265305127, -0.1833434647041659, 0.37800918987448673, 0.03559031656705768],
        [0.9074658265305127, 0.1833434647041659, -0.37800918987448673, 0.03559031656705768],
        [-0.9074658265305127, -0.1833434647041659, 0.37800918987448673, 0.03559031656705768],
        [0.9074658265305127, -0.1833434647041659, -0.37800918987448673, 0.03559031656705768],
        [-0.9074658265305127, 0.1833434647041659, -0.37800918987448673, 0.03559031656705768],
        [-0.9074658265305127, -0.1833434647041659, -0.37800918987448673, 0.03559031656705768],
        [0.37800918987448673, 0.1833434647041659, 0.9074658265305127, 0.03559031656705768],
        [-0.37800918987448673, 0.1833434647041659, 0.9074658265305127, 0.03559031656705768],
        [0.37800918987448673, -0.1833434647041659, 0.9074658265305127, 0.03559031656705768],
        [0.37800918987448673, 0.1833434647041659, -0.9074658265305127, 0.03559031656705768],
        [-0.37800918987448673, -0.1833434647041659, 0.9074658265305127, 0.03559031656705768],
        [0.37800918987448673, -0.1833434647041659, -0.9074658265305127, 0.03559031656705768],
        [-0.37800918987448673, 0.1833434647041659, -0.9074658265305127, 0.03559031656705768],
        [-0.37800918987448673, -0.1833434647041659, -0.9074658265305127, 0.03559031656705768],
        [0.37800918987448673, 0.9074658265305127, 0.1833434647041659, 0.03559031656705768],
        [-0.37800918987448673, 0.9074658265305127, 0.1833434647041659, 0.03559031656705768],
        [0.37800918987448673, -0.9074658265305127, 0.1833434647041659, 0.03559031656705768],
        [0.37800918987448673, 0.9074658265305127, -0.1833434647041659, 0.03559031656705768],
        [-0.37800918987448673, -0.9074658265305127, 0.1833434647041659, 0.03559031656705768],
        [0.37800918987448673, -0.9074658265305127, -0.1833434647041659, 0.03559031656705768],
        [-0.37800918987448673, 0.9074658265305127, -0.1833434647041659, 0.03559031656705768],
        [-0.37800918987448673, -0.9074658265305127, -0.1833434647041659, 0.03559031656705768],
        [0.1833434647041659, 0.37800918987448673, 0.9074658265305127, 0.03559031656705768],
        [-0.1833434647041659, 0.37800918987448673, 0.9074658265305127, 0.03559031656705768],
        [0.1833434647041659, -0.37800918987448673, 0.9074658265305127, 0.03559031656705768],
        [0.1833434647041659, 0.37800918987448673, -0.9074658265305127, 0.03559031656705768],
        [-0.1833434647041659, -0.37800918987448673, 0.9074658265305127, 0.03559031656705768],
        [0.1833434647041659, -0.37800918987448673, -0.9074658265305127, 0.03559031656705768],
        [-0.1833434647041659, 0.37800918987448673, -0.9074658265305127, 0.03559031656705768],
        [-0.1833434647041659, -0.37800918987448673, -0.9074658265305127, 0.03559031656705768],
        [0.9074658265305127, 0.37800918987448673, 0.1833434647041659, 0.03559031656705768],
        [-0.9074658265305127, 0.37800918987448673, 0.1833434647041659, 0.03559031656705768],
        [0.9074658265305127, -0.37800918987448673, 0.1833434647041659, 0.03559031656705768],
        [0.9074658265305127, 0.37800918987448673, -0.1833434647041659, 0.03559031656705768],
        [-0.9074658265305127, -0.37800918987448673, 0.1833434647041659, 0.03559031656705768],
        [0.9074658265305127, -0.37800918987448673, -0.1833434647041659, 0.03559031656705768],
        [-0.9074658265305127, 0.37800918987448673, -0.1833434647041659, 0.03559031656705768],
        [-0.9074658265305127, -0.37800918987448673, -0.1833434647041659, 0.03559031656705768],
    ]),
    (35, &[
        [1.0, 0.0, 0.0, 0.0066173225486109225],
        [-1.0, 0.0, 0.0, 0.0066173225486109225],
        [0.0, 1.0, 0.0, 0.0066173225486109225],
        [0.0, -1.0, 0.0, 0.0066173225486109225],
        [0.0, 0.0, 1.0, 0.0066173225486109225],
        [0.0, 0.0, -1.0, 0.0066173225486109225],
        [0.0, 0.7071067811865476, 0.7071067811865476, 0.03202187657509671],
        [0.0, -0.7071067811865476, 0.7071067811865476, 0.03202187657509671],
        [0.0, 0.7071067811865476, -0.7071067811865476, 0.03202187657509671],
        [0.0, -0.7071067811865476, -0.7071067811865476, 0.03202187657509671],
        [0.7071067811865476, 0.0, 0.7071067811865476, 0.03202187657509671],
        [0.7071067811865476, 0.0, -0.7071067811865476, 0.03202187657509671],
        [-0.7071067811865476, 0.0, 0.7071067811865476, 0.03202187657509671],
        [-0.7071067811865476, 0.0, -0.7071067811865476, 0.03202187657509671],
        [0.7071067811865476, 0.7071067811865476, 0.0, 0.03202187657509671],
        [-0.7071067811865476, 0.7071067811865476, 0.0, 0.03202187657509671],
        [0.7071067811865476, -0.7071067811865476, 0.0, 0.03202187657509671],
        [-0.7071067811865476, -0.7071067811865476, 0.0, 0.03202187657509671],
        [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.03157071178715079],
        [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.03157071178715079],
        [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.03157071178715079],
        [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.03157071178715079],
        [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.03157071178715079],
        [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.03157071178715079],
        [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.03157071178715079],
        [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.03157071178715079],
        [0.6909346307509111, 0.6909346307509111, 0.21264682470755186, 0.031797991969690964],
        [-0.6909346307509111, 0.6909346307509111, 0.21264682470755186, 0.031797991969690964],
        [0.6909346307509111, -0.6909346307509111, 0.21264682470755186, 0.031797991969690964],
        [0.6909346307509111, 0.6909346307509111, -0.21264682470755186, 0.031797991969690964],
        [-0.6909346307509111, -0.6909346307509111, 0.21264682470755186, 0.031797991969690964],
        [-0.6909346307509111, 0.6909346307509111, -0.21264682470755186, 0.031797991969690964],
        [0.6909346307509111, -0.6909346307509111, -0.21264682470755186, 0.031797991969690964],
        [-0.6909346307509111, -0.6909346307509111, -0.21264682470755186, 0.031797991969690964],
        [-0.6909346307509111, 0.21264682470755186, 0.6909346307509111, 0.031797991969690964],
        [0.6909346307509111, -0.21264682470755186, 0.6909346307509111, 0.031797991969690964],
        [0.6909346307509111, 0.21264682470755186, -0.6909346307509111, 0.031797991969690964],
        [-0.6909346307509111, -0.21264682470755186, 0.6909346307509111, 0.031797991969690964],
        [-0.6909346307509111, 0.21264682470755186, -0.6909346307509111, 0.031797991969690964],
        [0.6909346307509111, -0.21264682470755186, -0.6909346307509111, 0.031797991969690964],
        [-0.6909346307509111, -0.21264682470755186, -0.6909346307509111, 0.031797991969690964],
        [0.6909346307509111, 0.21264682470755186, 0.6909346307509111, 0.031797991969690964],
        [0.21264682470755186, 0.6909346307509111, 0.6909346307509111, 0.031797991969690964],
        [-0.21264682470755186, 0.6909346307509111, 0.6909346307509111, 0.031797991969690964],
        [0.21264682470755186, -0.6909346307509111, 0.6909346307509111, 0.031797991969690964],
        [0.21264682470755186, 0.6909346307509111, -0.6909346307509111, 0.031797991969690964],
        [-0.21264682470755186, -0.6909346307509111, 0.6909346307509111, 0.031797991969690964],
        [-0.21264682470755186, 0.6909346307509111, -0.6909346307509111, 0.031797991969690964],
        [0.21264682470755186, -0.6909346307509111, -0.6909346307509111, 0.031797991969690964],
        [-0.21264682470755186, -0.6909346307509111, -0.6909346307509111, 0.031797991969690964],
        [0.1774836054609158, 0.1774836054609158, 0.9679871587914728, 0.025312176697590755],
        [-0.1774836054609158, 0.1774836054609158, 0.9679871587914728, 0.025312176697590755],
        [0.1774836054609158, -0.1774836054609158, 0.9679871587914728, 0.025312176697590755],
        [0.1774836054609158, 0.1774836054609158, -0.9679871587914728, 0.025312176697590755],
        [-0.1774836054609158, -0.1774836054609158, 0.9679871587914728, 0.025312176697590755],
        [-0.1774836054609158, 0.1774836054609158, -0.9679871587914728, 0.025312176697590755],
        [0.1774836054609158, -0.1774836054609158, -0.9679871587914728, 0.025312176697590755],
        [-0.1774836054609158, -0.1774836054609158, -0.9679871587914728, 0.025312176697590755],
        [-0.1774836054609158, 0.9679871587914728, 0.1774836054609158, 0.025312176697590755],
        [0.1774836054609158, -0.9679871587914728, 0.1774836054609158, 0.025312176697590755],
        [0.1774836054609158, 0.9679871587914728, -0.1774836054609158, 0.025312176697590755],
        [-0.1774836054609158, -0.9679871587914728, 0.1774836054609158, 0.025312176697590755],
        [-0.1774836054609158, 0.9679871587914728, -0.1774836054609158, 0.025312176697590755],
        [0.1774836054609158, -0.9679871587914728, -0.1774836054609158, 0.025312176697590755],
        [-0.1774836054609158, -0.9679871587914728, -0.1774836054609158, 0.025312176697590755],
        [0.1774836054609158, 0.9679871587914728, 0.1774836054609158, 0.025312176697590755],
        [0.9679871587914728, 0.1774836054609158, 0.1774836054609158, 0.025312176697590755],
        [-0.9679871587914728, 0.1774836054609158, 0.1774836054609158, 0.025312176697590755],
        [0.9679871587914728, -0.1774836054609158, 0.1774836054609158, 0.025312176697590755],
        [0.9679871587914728, 0.1774836054609158, -0.1774836054609158, 0.025312176697590755],
        [-0.9679871587914728, -0.1774836054609158, 0.1774836054609158, 0.025312176697590755],
        [-0.9679871587914728, 0.1774836054609158, -0.1774836054609158, 0.025312176697590755],
        [0.9679871587914728, -0.1774836054609158, -0.1774836054609158, 0.025312176697590755],
        [-0.9679871587914728, -0.1774836054609158, -0.1774836054609158, 0.025312176697590755],
        [0.4914342637784746, 0.4914342637784746, 0.7190165010408435, 0.0314376056414214],
        [-0.4914342637784746, 0.4914342637784746, 0.7190165010408435, 0.0314376056414214],
        [0.4914342637784746, -0.4914342637784746, 0.7190165010408435, 0.0314376056414214],
        [0.4914342637784746, 0.4914342637784746, -0.7190165010408435, 0.0314376056414214],
        [-0.4914342637784746, -0.4914342637784746, 0.7190165010408435, 0.0314376056414214],
        [-0.4914342637784746, 0.4914342637784746, -0.7190165010408435, 0.0314376056414214],
        [0.4914342637784746, -0.4914342637784746, -0.7190165010408435, 0.0314376056414214],
        [-0.4914342637784746, -0.4914342637784746, -0.7190165010408435, 0.0314376056414214],
        [-0.4914342637784746, 0.7190165010408435, 0.4914342637784746, 0.0314376056414214],
        [0.4914342637784746, -0.7190165010408435, 0.4914342637784746, 0.0314376056414214],
        [0.4914342637784746, 0.7190165010408435, -0.4914342637784746, 0.0314376056414214],
        [-0.4914342637784746, -0.7190165010408435, 0.4914342637784746, 0.0314376056414214],
        [-0.4914342637784746, 0.7190165010408435, -0.4914342637784746, 0.0314376056414214],
        [0.4914342637784746, -0.7190165010408435, -0.4914342637784746, 0.0314376056414214],
        [-0.4914342637784746, -0.7190165010408435, -0.4914342637784746, 0.0314376056414214],
        [0.4914342637784746, 0.7190165010408435, 0.4914342637784746, 0.0314376056414214],
        [0.7190165010408435, 0.4914342637784746, 0.4914342637784746, 0.0314376056414214],
        [-0.7190165010408435, 0.4914342637784746, 0.4914342637784746, 0.0314376056414214],
        [0.7190165010408435, -0.4914342637784746, 0.4914342637784746, 0.0314376056414214],
        [0.7190165010408435, 0.4914342637784746, -0.4914342637784746, 0.0314376056414214],
        [-0.7190165010408435, -0.4914342637784746, 0.4914342637784746, 0.0314376056414214],
        [-0.7190165010408435, 0.4914342637784746, -0.4914342637784746, 0.0314376056414214],
        [0.7190165010408435, -0.4914342637784746, -0.4914342637784746, 0.0314376056414214],
        [-0.7190165010408435, -0.4914342637784746, -0.4914342637784746, 0.0314376056414214],
        [0.6456664707424256, 0.6456664707424256, 0.40771266489776975, 0.03158264676889633],
        [-0.6456664707424256, 0.6456664707424256, 0.40771266489776975, 0.03158264676889633],
        [0.6456664707424256, -0.6456664707424256, 0.40771266489776975, 0.03158264676889633],
        [0.6456664707424256, 0.6456664707424256, -0.40771266489776975, 0.03158264676889633],
        [-0.6456664707424256, -0.6456664707424256, 0.40771266489776975, 0.03158264676889633],
        [-0.6456664707424256, 0.6456664707424256, -0.40771266489776975, 0.03158264676889633],
        [0.6456664707424256, -0.6456664707424256, -0.40771266489776975, 0.03158264676889633],
        [-0.6456664707424256, -0.6456664707424256, -0.40771266489776975, 0.03158264676889633],
        [-0.6456664707424256, 0.40771266489776975, 0.6456664707424256, 0.03158264676889633],
        [0.6456664707424256, -0.40771266489776975, 0.6456664707424256, 0.03158264676889633],
        [0.6456664707424256, 0.40771266489776975, -0.6456664707424256, 0.03158264676889633],
        [-0.6456664707424256, -0.40771266489776975, 0.6456664707424256, 0.03158264676889633],
        [-0.6456664707424256, 0.40771266489776975, -0.6456664707424256, 0.03158264676889633],
        [0.6456664707424256, -0.40771266489776975, -0.6456664707424256, 0.03158264676889633],
        [-0.6456664707424256, -0.40771266489776975, -0.6456664707424256, 0.03158264676889633],
        [0.6456664707424256, 0.40771266489776975, 0.6456664707424256, 0.03158264676889633],
        [0.40771266489776975, 0.6456664707424256, 0.6456664707424256, 0.03158264676889633],
        [-0.40771266489776975, 0.6456664707424256, 0.6456664707424256, 0.03158264676889633],
        [0.40771266489776975, -0.6456664707424256, 0.6456664707424256, 0.03158264676889633],
        [0.40771266489776975, 0.6456664707424256, -0.6456664707424256, 0.03158264676889633],
        [-0.40771266489776975, -0.6456664707424256, 0.6456664707424256, 0.03158264676889633],
        [-0.40771266489776975, 0.6456664707424256, -0.6456664707424256, 0.03158264676889633],
        [0.40771266489776975, -0.6456664707424256, -0.6456664707424256, 0.03158264676889633],
        [-0.40771266489776975, -0.6456664707424256, -0.6456664707424256, 0.03158264676889633],
        [0.2861289010307638, 0.2861289010307638, 0.9144728011208725, 0.028936516045220798],
        [-0.2861289010307638, 0.2861289010307638, 0.9144728011208725, 0.028936516045220798],
        [0.2861289010307638, -0.2861289010307638, 0.9144728011208725, 0.028936516045220798],
        [0.2861289010307638, 0.2861289010307638, -0.9144728011208725, 0.028936516045220798],
        [-0.2861289010307638, -0.2861289010307638, 0.9144728011208725, 0.028936516045220798],
        [-0.2861289010307638, 0.2861289010307638, -0.9144728011208725, 0.028936516045220798],
        [0.2861289010307638, -0.2861289010307638, -0.9144728011208725, 0.028936516045220798],
        [-0.2861289010307638, -0.2861289010307638, -0.9144728011208725, 0.028936516045220798],
        [-0.2861289010307638, 0.9144728011208725, 0.2861289010307638, 0.028936516045220798],
        [0.2861289010307638, -0.9144728011208725, 0.2861289010307638, 0.028936516045220798],
        [0.2861289010307638, 0.9144728011208725, -0.2861289010307638, 0.028936516045220798],
        [-0.2861289010307638, -0.9144728011208725, 0.2861289010307638, 0.028936516045220798],
        [-0.2861289010307638, 0.9144728011208725, -0.2861289010307638, 0.028936516045220798],
        [0.2861289010307638, -0.9144728011208725, -0.2861289010307638, 0.028936516045220798],
        [-0.2861289010307638, -0.9144728011208725, -0.2861289010307638, 0.028936516045220798],
        [0.2861289010307638, 0.9144728011208725, 0.2861289010307638, 0.028936516045220798],
        [0.9144728011208725, 0.2861289010307638, 0.2861289010307638, 0.028936516045220798],
        [-0.9144728011208725, 0.2861289010307638, 0.2861289010307638, 0.028936516045220798],
        [0.9144728011208725, -0.2861289010307638, 0.2861289010307638, 0.028936516045220798],
        [0.9144728011208725, 0.2861289010307638, -0.2861289010307638, 0.028936516045220798],
        [-0.9144728011208725, -0.2861289010307638, 0.2861289010307638, 0.028936516045220798],
        [-0.9144728011208725, 0.2861289010307638, -0.2861289010307638, 0.028936516045220798],
        [0.9144728011208725, -0.2861289010307638, -0.2861289010307638, 0.028936516045220798],
        [-0.9144728011208725, -0.2861289010307638, -0.2861289010307638, 0.028936516045220798],
        [0.07568084367178018, 0.07568084367178018, 0.9942559126312779, 0.01837826200283551],
        [-0.07568084367178018, 0.07568084367178018, 0.9942559126312779, 0.01837826200283551],
        [0.07568084367178018, -0.07568084367178018, 0.9942559126312779, 0.01837826200283551],
        [0.07568084367178018, 0.07568084367178018, -0.9942559126312779, 0.01837826200283551],
        [-0.07568084367178018, -0.07568084367178018, 0.9942559126312779, 0.01837826200283551],
        [-0.07568084367178018, 0.07568084367178018, -0.9942559126312779, 0.01837826200283551],
        [0.07568084367178018, -0.07568084367178018, -0.9942559126312779, 0.01837826200283551],
        [-0.07568084367178018, -0.07568084367178018, -0.9942559126312779, 0.01837826200283551],
        [-0.07568084367178018, 0.9942559126312779, 0.07568084367178018, 0.01837826200283551],
        [0.07568084367178018, -0.9942559126312779, 0.07568084367178018, 0.01837826200283551],
        [0.07568084367178018, 0.9942559126312779, -0.07568084367178018, 0.01837826200283551],
        [-0.07568084367178018, -0.9942559126312779, 0.07568084367178018, 0.01837826200283551],
        [-0.07568084367178018, 0.9942559126312779, -0.07568084367178018, 0.01837826200283551],
        [0.07568084367178018, -0.9942559126312779, -0.07568084367178018, 0.01837826200283551],
        [-0.07568084367178018, -0.9942559126312779, -0.07568084367178018, 0.01837826200283551],
        [0.07568084367178018, 0.9942559126312779, 0.07568084367178018, 0.01837826200283551],
        [0.9942559126312779, 0.07568084367178018, 0.07568084367178018, 0.01837826200283551],
        [-0.9942559126312779, 0.07568084367178018, 0.07568084367178018, 0.01837826200283551],
        [0.9942559126312779, -0.07568084367178018, 0.07568084367178018, 0.01837826200283551],
        [0.9942559126312779, 0.07568084367178018, -0.07568084367178018, 0.01837826200283551],
        [-0.9942559126312779, -0.07568084367178018, 0.07568084367178018, 0.01837826200283551],
        [-0.9942559126312779, 0.07568084367178018, -0.07568084367178018, 0.01837826200283551],
        [0.9942559126312779, -0.07568084367178018, -0.07568084367178018, 0.01837826200283551],
        [-0.9942559126312779, -0.07568084367178018, -0.07568084367178018, 0.01837826200283551],
        [0.3927259763368002, 0.3927259763368002, 0.8315844004192323, 0.030729468903784314],
        [-0.3927259763368002, 0.3927259763368002, 0.8315844004192323, 0.030729468903784314],
        [0.3927259763368002, -0.3927259763368002, 0.8315844004192323, 0.030729468903784314],
        [0.3927259763368002, 0.3927259763368002, -0.8315844004192323, 0.030729468903784314],
        [-0.3927259763368002, -0.3927259763368002, 0.8315844004192323, 0.030729468903784314],
        [-0.3927259763368002, 0.3927259763368002, -0.8315844004192323, 0.030729468903784314],
        [0.3927259763368002, -0.3927259763368002, -0.8315844004192323, 0.030729468903784314],
        [-0.3927259763368002, -0.3927259763368002, -0.8315844004192323, 0.030729468903784314],
        [-0.3927259763368002, 0.8315844004192323, 0.3927259763368002, 0.030729468903784314],
        [0.3927259763368002, -0.8315844004192323, 0.3927259763368002, 0.030729468903784314],
        [0.3927259763368002, 0.8315844004192323, -0.3927259763368002, 0.030729468903784314],
        [-0.3927259763368002, -0.8315844004192323, 0.3927259763368002, 0.030729468903784314],
        [-0.3927259763368002, 0.8315844004192323, -0.3927259763368002, 0.030729468903784314],
        [0.3927259763368002, -0.8315844004192323, -0.3927259763368002, 0.030729468903784314],
        [-0.3927259763368002, -0.8315844004192323, -0.3927259763368002, 0.030729468903784314],
        [0.3927259763368002, 0.8315844004192323, 0.3927259763368002, 0.030729468903784314],
        [0.8315844004192323, 0.3927259763368002, 0.3927259763368002, 0.030729468903784314],
        [-0.8315844004192323, 0.3927259763368002, 0.3927259763368002, 0.030729468903784314],
        [0.8315844004192323, -0.3927259763368002, 0.3927259763368002, 0.030729468903784314],
        [0.8315844004192323, 0.3927259763368002, -0.3927259763368002, 0.030729468903784314],
        [-0.8315844004192323, -0.3927259763368002, 0.3927259763368002, 0.030729468903784314],
        [-0.8315844004192323, 0.3927259763368002, -0.3927259763368002, 0.030729468903784314],
        [0.8315844004192323, -0.3927259763368002, -0.3927259763368002, 0.030729468903784314],
        [-0.8315844004192323, -0.3927259763368002, -0.3927259763368002, 0.030729468903784314],
        [0.8818132877794288, 0.471598691151316, 0.0, 0.030378476831136317],
        [-0.8818132877794288, 0.471598691151316, 0.0, 0.030378476831136317],
        [0.8818132877794288, -0.471598691151316, 0.0, 0.030378476831136317],
        [-0.8818132877794288, -0.471598691151316, 0.0, 0.030378476831136317],
        [0.471598691151316, 0.8818132877794288, 0.0, 0.030378476831136317],
        [-0.471598691151316, 0.8818132877794288, 0.0, 0.030378476831136317],
        [0.471598691151316, -0.8818132877794288, 0.0, 0.030378476831136317],
        [-0.471598691151316, -0.8818132877794288, 0.0, 0.030378476831136317],
        [0.8818132877794288, 0.0, 0.471598691151316, 0.030378476831136317],
        [-0.8818132877794288, 0.0, 0.471598691151316, 0.030378476831136317],
        [0.8818132877794288, 0.0, -0.471598691151316, 0.030378476831136317],
        [-0.8818132877794288, 0.0, -0.471598691151316, 0.030378476831136317],
        [0.471598691151316, 0.0, 0.8818132877794288, 0.030378476831136317],
        [-0.471598691151316, 0.0, 0.8818132877794288, 0.030378476831136317],
        [0.471598691151316, 0.0, -0.8818132877794288, 0.030378476831136317],
        [-0.471598691151316, 0.0, -0.8818132877794288, 0.030378476831136317],
        [0.0, 0.8818132877794288, 0.471598691151316, 0.030378476831136317],
        [0.0, -0.8818132877794288, 0.471598691151316, 0.030378476831136317],
        [0.0, 0.8818132877794288, -0.471598691151316, 0.030378476831136317],
        [0.0, -0.8818132877794288, -0.471598691151316, 0.030378476831136317],
        [0.0, 0.471598691151316, 0.8818132877794288, 0.030378476831136317],
        [0.0, -0.471598691151316, 0.8818132877794288, 0.030378476831136317],
        [0.0, 0.471598691151316, -0.8818132877794288, 0.030378476831136317],
        [0.0, -0.471598691151316, -0.8818132877794288, 0.030378476831136317],
        [0.9776428111182649, 0.2102725228573068, 0.0, 0.024013722037852854],
        [-0.9776428111182649, 0.2102725228573068, 0.0, 0.024013722037852854],
        [0.9776428111182649, -0.2102725228573068, 0.0, 0.024013722037852854],
        [-0.9776428111182649, -0.2102725228573068, 0.0, 0.024013722037852854],
        [0.2102725228573068, 0.9776428111182649, 0.0, 0.024013722037852854],
        [-0.2102725228573068, 0.9776428111182649, 0.0, 0.024013722037852854],
        [0.2102725228573068, -0.9776428111182649, 0.0, 0.024013722037852854],
        [-0.2102725228573068, -0.9776428111182649, 0.0, 0.024013722037852854],
        [0.9776428111182649, 0.0, 0.2102725228573068, 0.024013722037852854],
        [-0.9776428111182649, 0.0, 0.2102725228573068, 0.024013722037852854],
        [0.9776428111182649, 0.0, -0.2102725228573068, 0.024013722037852854],
        [-0.9776428111182649, 0.0, -0.2102725228573068, 0.024013722037852854],
        [0.2102725228573068, 0.0, 0.9776428111182649, 0.024013722037852854],
        [-0.2102725228573068, 0.0, 0.9776428111182649, 0.024013722037852854],
        [0.2102725228573068, 0.0, -0.9776428111182649, 0.024013722037852854],
        [-0.2102725228573068, 0.0, -0.9776428111182649, 0.024013722037852854],
        [0.0, 0.9776428111182649, 0.2102725228573068, 0.024013722037852854],
        [0.0, -0.9776428111182649, 0.2102725228573068, 0.024013722037852854],
        [0.0, 0.9776428111182649, -0.2102725228573068, 0.024013722037852854],
        [0.0, -0.9776428111182649, -0.2102725228573068, 0.024013722037852854],
        [0.0, 0.2102725228573068, 0.9776428111182649, 0.024013722037852854],
        [0.0, -0.2102725228573068, 0.9776428111182649, 0.024013722037852854],
        [0.0, 0.2102725228573068, -0.9776428111182649, 0.024013722037852854],
        [0.0, -0.2102725228573068, -0.9776428111182649, 0.024013722037852854],
        [0.2054823696403044, 0.8689460322872412, 0.4502330382582625, 0.030372038685964664],
        [-0.2054823696403044, 0.8689460322872412, 0.4502330382582625, 0.030372038685964664],
        [0.2054823696403044, -0.8689460322872412, 0.4502330382582625, 0.030372038685964664],
        [0.2054823696403044, 0.8689460322872412, -0.4502330382582625, 0.030372038685964664],
        [-0.2054823696403044, -0.8689460322872412, 0.4502330382582625, 0.030372038685964664],
        [0.2054823696403044, -0.8689460322872412, -0.4502330382582625, 0.030372038685964664],
        [-0.2054823696403044, 0.8689460322872412, -0.4502330382582625, 0.030372038685964664],
        [-0.2054823696403044, -0.8689460322872412, -0.4502330382582625, 0.030372038685964664],
        [0.8689460322872412, 0.2054823696403044, 0.4502330382582625, 0.030372038685964664],
        [-0.8689460322872412, 0.2054823696403044, 0.4502330382582625, 0.030372038685964664],
        [0.8689460322872412, -0.2054823696403044, 0.4502330382582625, 0.030372038685964664],
        [0.8689460322872412, 0.2054823696403044, -0.4502330382582625, 0.030372038685964664],
        [-0.8689460322872412, -0.2054823696403044, 0.4502330382582625, 0.030372038685964664],
        [0.8689460322872412, -0.2054823696403044, -0.4502330382582625, 0.030372038685964664],
        [-0.8689460322872412, 0.2054823696403044, -0.4502330382582625, 0.030372038685964664],
        [-0.8689460322872412, -0.2054823696403044, -0.4502330382582625, 0.030372038685964664],
        [0.4502330382582625, 0.2054823696403044, 0.8689460322872412, 0.030372038685964664],
        [-0.4502330382582625, 0.2054823696403044, 0.8689460322872412, 0.030372038685964664],
        [0.4502330382582625, -0.2054823696403044, 0.8689460322872412, 0.030372038685964664],
        [0.4502330382582625, 0.2054823696403044, -0.8689460322872412, 0.030372038685964664],
        [-0.4502330382582625, -0.2054823696403044, 0.8689460322872412, 0.030372038685964664],
        [0.4502330382582625, -0.2054823696403044, -0.8689460322872412, 0.030372038685964664],
        [-0.4502330382582625, 0.2054823696403044, -0.8689460322872412, 0.030372038685964664],
        [-0.4502330382582625, -0.2054823696403044, -0.8689460322872412, 0.030372038685964664],
        [0.4502330382582625, 0.8689460322872412, 0.2054823696403044, 0.030372038685964664],
        [-0.4502330382582625, 0.8689460322872412, 0.2054823696403044, 0.030372038685964664],
        [0.4502330382582625, -0.8689460322872412, 0.2054823696403044, 0.030372038685964664],
        [0.4502330382582625, 0.8689460322872412, -0.2054823696403044, 0.030372038685964664],
        [-0.4502330382582625, -0.8689460322872412, 0.2054823696403044, 0.030372038685964664],
        [0.4502330382582625, -0.8689460322872412, -0.2054823696403044, 0.030372038685964664],
        [-0.4502330382582625, 0.8689460322872412, -0.2054823696403044, 0.030372038685964664],
        [-0.4502330382582625, -0.8689460322872412, -0.2054823696403044, 0.030372038685964664],
        [0.2054823696403044, 0.4502330382582625, 0.8689460322872412, 0.030372038685964664],
        [-0.2054823696403044, 0.4502330382582625, 0.8689460322872412, 0.030372038685964664],
        [0.2054823696403044, -0.4502330382582625, 0.8689460322872412, 0.030372038685964664],
        [0.2054823696403044, 0.4502330382582625, -0.8689460322872412, 0.030372038685964664],
        [-0.2054823696403044, -0.4502330382582625, 0.8689460322872412, 0.030372038685964664],
        [0.2054823696403044, -0.4502330382582625, -0.8689460322872412, 0.030372038685964664],
        [-0.2054823696403044, 0.4502330382582625, -0.8689460322872412, 0.030372038685964664],
        [-0.2054823696403044, -0.4502330382582625, -0.8689460322872412, 0.030372038685964664],
        [0.8689460322872412, 0.4502330382582625, 0.2054823696403044, 0.030372038685964664],
        [-0.8689460322872412, 0.4502330382582625, 0.2054823696403044, 0.030372038685964664],
        [0.8689460322872412, -0.4502330382582625, 0.2054823696403044, 0.030372038685964664],
        [0.8689460322872412, 0.4502330382582625, -0.2054823696403044, 0.030372038685964664],
        [-0.8689460322872412, -0.4502330382582625, 0.2054823696403044, 0.030372038685964664],
        [0.8689460322872412, -0.4502330382582625, -0.2054823696403044, 0.030372038685964664],
        [-0.8689460322872412, 0.4502330382582625, -0.2054823696403044, 0.030372038685964664],
        [-0.8689460322872412, -0.4502330382582625, -0.2054823696403044, 0.030372038685964664],
        [0.5905157048925271, 0.7999278543857286, 0.10680182607580488, 0.03156969938549682],
        [-0.5905157048925271, 0.7999278543857286, 0.10680182607580488, 0.03156969938549682],
        [0.5905157048925271, -0.7999278543857286, 0.10680182607580488, 0.03156969938549682],
        [0.5905157048925271, 0.7999278543857286, -0.10680182607580488, 0.03156969938549682],
        [-0.5905157048925271, -0.7999278543857286, 0.10680182607580488, 0.03156969938549682],
        [0.5905157048925271, -0.7999278543857286, -0.10680182607580488, 0.03156969938549682],
        [-0.5905157048925271, 0.7999278543857286, -0.10680182607580488, 0.03156969938549682],
        [-0.5905157048925271, -0.7999278543857286, -0.10680182607580488, 0.03156969938549682],
        [0.7999278543857286, 0.5905157048925271, 0.10680182607580488, 0.03156969938549682],
        [-0.7999278543857286, 0.5905157048925271, 0.10680182607580488, 0.03156969938549682],
        [0.7999278543857286, -0.5905157048925271, 0.10680182607580488, 0.03156969938549682],
        [0.7999278543857286, 0.5905157048925271, -0.10680182607580488, 0.03156969938549682],
        [-0.7999278543857286, -0.5905157048925271, 0.10680182607580488, 0.03156969938549682],
        [0.7999278543857286, -0.5905157048925271, -0.10680182607580488, 0.03156969938549682],
        [-0.7999278543857286, 0.5905157048925271, -0.10680182607580488, 0.03156969938549682],
        [-0.7999278543857286, -0.5905157048925271, -0.10680182607580488, 0.03156969938549682],
        [0.10680182607580488, 0.5905157048925271, 0.7999278543857286, 0.03156969938549682],
        [-0.10680182607580488, 0.5905157048925271, 0.7999278543857286, 0.03156969938549682],
        [0.10680182607580488, -0.5905157048925271, 0.7999278543857286, 0.03156969938549682],
        [0.10680182607580488, 0.5905157048925271, -0.7999278543857286, 0.03156969938549682],
        [-0.10680182607580488, -0.5905157048925271, 0.7999278543857286, 0.03156969938549682],
        [0.10680182607580488, -0.5905157048925271, -0.7999278543857286, 0.03156969938549682],
        [-0.10680182607580488, 0.5905157048925271, -0.7999278543857286, 0.03156969938549682],
        [-0.10680182607580488, -0.5905157048925271, -0.7999278543857286, 0.03156969938549682],
        [0.10680182607580488, 0.7999278543857286, 0.5905157048925271, 0.03156969938549682],
        [-0.10680182607580488, 0.7999278543857286, 0.5905157048925271, 0.03156969938549682],
        [0.10680182607580488, -0.7999278543857286, 0.5905157048925271, 0.03156969938549682],
        [0.10680182607580488, 0.7999278543857286, -0.5905157048925271, 0.03156969938549682],
        [-0.10680182607580488, -0.7999278543857286, 0.5905157048925271, 0.03156969938549682],
        [0.10680182607580488, -0.7999278543857286, -0.5905157048925271, 0.03156969938549682],
        [-0.10680182607580488, 0.7999278543857286, -0.5905157048925271, 0.03156969938549682],
        [-0.10680182607580488, -0.7999278543857286, -0.5905157048925271, 0.03156969938549682],
        [0.5905157048925271, 0.10680182607580488, 0.7999278543857286, 0.03156969938549682],
        [-0.5905157048925271, 0.10680182607580488, 0.7999278543857286, 0.03156969938549682],
        [0.5905157048925271, -0.10680182607580488, 0.7999278543857286, 0.03156969938549682],
        [0.5905157048925271, 0.10680182607580488, -0.7999278543857286, 0.03156969938549682],
        [-0.5905157048925271, -0.10680182607580488, 0.7999278543857286, 0.03156969938549682],
        [0.5905157048925271, -0.10680182607580488, -0.7999278543857286, 0.03156969938549682],
        [-0.5905157048925271, 0.10680182607580488, -0.7999278543857286, 0.03156969938549682],
        [-0.5905157048925271, -0.10680182607580488, -0.7999278543857286, 0.03156969938549682],
        [0.7999278543857286, 0.10680182607580488, 0.5905157048925271, 0.03156969938549682],
        [-0.7999278543857286, 0.10680182607580488, 0.5905157048925271, 0.03156969938549682],
        [0.7999278543857286, -0.10680182607580488, 0.5905157048925271, 0.03156969938549682],
        [0.7999278543857286, 0.10680182607580488, -0.5905157048925271, 0.03156969938549682],
        [-0.7999278543857286, -0.10680182607580488, 0.5905157048925271, 0.03156969938549682],
        [0.7999278543857286, -0.10680182607580488, -0.5905157048925271, 0.03156969938549682],
        [-0.7999278543857286, 0.10680182607580488, -0.5905157048925271, 0.03156969938549682],
        [-0.7999278543857286, -0.10680182607580488, -0.5905157048925271, 0.03156969938549682],
        [0.5550152361076807, 0.7717462626915901, 0.31042840351665446, 0.03137375448165044],
        [-0.5550152361076807, 0.7717462626915901, 0.31042840351665446, 0.03137375448165044],
        [0.5550152361076807, -0.7717462626915901, 0.31042840351665446, 0.03137375448165044],
        [0.5550152361076807, 0.7717462626915901, -0.31042840351665446, 0.03137375448165044],
        [-0.5550152361076807, -0.7717462626915901, 0.31042840351665446, 0.03137375448165044],
        [0.5550152361076807, -0.7717462626915901, -0.31042840351665446, 0.03137375448165044],
        [-0.5550152361076807, 0.7717462626915901, -0.31042840351665446, 0.03137375448165044],
        [-0.5550152361076807, -0.7717462626915901, -0.31042840351665446, 0.03137375448165044],
        [0.7717462626915901, 0.5550152361076807, 0.31042840351665446, 0.03137375448165044],
        [-0.7717462626915901, 0.5550152361076807, 0.31042840351665446, 0.03137375448165044],
        [0.7717462626915901, -0.5550152361076807, 0.31042840351665446, 0.03137375448165044],
        [0.7717462626915901, 0.5550152361076807, -0.31042840351665446, 0.03137375448165044],
        [-0.7717462626915901, -0.5550152361076807, 0.31042840351665446, 0.03137375448165044],
        [0.7717462626915901, -0.5550152361076807, -0.31042840351665446, 0.03137375448165044],
        [-0.7717462626915901, 0.5550152361076807, -0.31042840351665446, 0.03137375448165044],
        [-0.7717462626915901, -0.5550152361076807, -0.31042840351665446, 0.03137375448165044],
        [0.31042840351665446, 0.5550152361076807, 0.7717462626915901, 0.03137375448165044],
        [-0.31042840351665446, 0.5550152361076807, 0.7717462626915901, 0.03137375448165044],
        [0.31042840351665446, -0.5550152361076807, 0.7717462626915901, 0.03137375448165044],
        [0.31042840351665446, 0.5550152361076807, -0.7717462626915901, 0.03137375448165044],
        [-0.31042840351665446, -0.5550152361076807, 0.7717462626915901, 0.03137375448165044],
        [0.31042840351665446, -0.5550152361076807, -0.7717462626915901, 0.03137375448165044],
        [-0.31042840351665446, 0.5550152361076807, -0.7717462626915901, 0.03137375448165044],
        [-0.31042840351665446, -0.5550152361076807, -0.7717462626915901, 0.03137375448165044],
        [0.31042840351665446, 0.7717462626915901, 0.5550152361076807, 0.03137375448165044],
        [-0.31042840351665446, 0.7717462626915901, 0.5550152361076807, 0.03137375448165044],
        [0.31042840351665446, -0.7717462626915901, 0.5550152361076807, 0.03137375448165044],
        [0.31042840351665446, 0.7717462626915901, -0.5550152361076807, 0.03137375448165044],
        [-0.31042840351665446, -0.7717462626915901, 0.5550152361076807, 0.03137375448165044],
        [0.31042840351665446, -0.7717462626915901, -0.5550152361076807, 0.03137375448165044],
        [-0.31042840351665446, 0.7717462626915901, -0.5550152361076807, 0.03137375448165044],
        [-0.31042840351665446, -0.7717462626915901, -0.5550152361076807, 0.03137375448165044],
        [0.5550152361076807, 0.31042840351665446, 0.7717462626915901, 0.03137375448165044],
        [-0.5550152361076807, 0.31042840351665446, 0.7717462626915901, 0.03137375448165044],
        [0.5550152361076807, -0.31042840351665446, 0.7717462626915901, 0.03137375448165044],
        [0.5550152361076807, 0.31042840351665446, -0.7717462626915901, 0.03137375448165044],
        [-0.5550152361076807, -0.31042840351665446, 0.7717462626915901, 0.03137375448165044],
        [0.5550152361076807, -0.31042840351665446, -0.7717462626915901, 0.03137375448165044],
        [-0.5550152361076807, 0.31042840351665446, -0.7717462626915901, 0.03137375448165044],
        [-0.5550152361076807, -0.31042840351665446, -0.7717462626915901, 0.03137375448165044],
        [0.7717462626915901, 0.31042840351665446, 0.5550152361076807, 0.03137375448165044],
        [-0.7717462626915901, 0.31042840351665446, 0.5550152361076807, 0.03137375448165044],
        [0.7717462626915901, -0.31042840351665446, 0.5550152361076807, 0.03137375448165044],
        [0.7717462626915901, 0.31042840351665446, -0.5550152361076807, 0.03137375448165044],
        [-0.7717462626915901, -0.31042840351665446, 0.5550152361076807, 0.03137375448165044],
        [0.7717462626915901, -0.31042840351665446, -0.5550152361076807, 0.03137375448165044],
        [-0.7717462626915901, 0.31042840351665446, -0.5550152361076807, 0.03137375448165044],
        [-0.7717462626915901, -0.31042840351665446, -0.5550152361076807, 0.03137375448165044],
        [0.9371809858553722, 0.3344363145343455, 0.09921769636429248, 0.028106042036613862],
        [-0.9371809858553722, 0.3344363145343455, 0.09921769636429248, 0.028106042036613862],
        [0.9371809858553722, -0.3344363145343455, 0.09921769636429248, 0.028106042036613862],
        [0.9371809858553722, 0.3344363145343455, -0.09921769636429248, 0.028106042036613862],
        [-0.9371809858553722, -0.3344363145343455, 0.09921769636429248, 0.028106042036613862],
        [0.9371809858553722, -0.3344363145343455, -0.09921769636429248, 0.028106042036613862],
        [-0.9371809858553722, 0.3344363145343455, -0.09921769636429248, 0.028106042036613862],
        [-0.9371809858553722, -0.3344363145343455, -0.09921769636429248, 0.028106042036613862],
        [0.3344363145343455, 0.9371809858553722, 0.09921769636429248, 0.028106042036613862],
        [-0.3344363145343455, 0.9371809858553722, 0.09921769636429248, 0.028106042036613862],
        [0.3344363145343455, -0.9371809858553722, 0.09921769636429248, 0.028106042036613862],
        [0.3344363145343455, 0.9371809858553722, -0.09921769636429248, 0.028106042036613862],
        [-0.3344363145343455, -0.9371809858553722, 0.09921769636429248, 0.028106042036613862],
        [0.3344363145343455, -0.9371809858553722, -0.09921769636429248, 0.028106042036613862],
        [-0.3344363145343455, 0.9371809858553722, -0.09921769636429248, 0.028106042036613862],
        [-0.3344363145343455, -0.9371809858553722, -0.09921769636429248, 0.028106042036613862],
        [0.09921769636429248, 0.9371809858553722, 0.3344363145343455, 0.028106042036613862],
        [-0.09921769636429248, 0.9371809858553722, 0.3344363145343455, 0.028106042036613862],
        [0.09921769636429248, -0.9371809858553722, 0.3344363145343455, 0.028106042036613862],
        [0.09921769636429248, 0.9371809858553722, -0.3344363145343455, 0.028106042036613862],
        [-0.09921769636429248, -0.9371809858553722, 0.3344363145343455, 0.028106042036613862],
        [0.09921769636429248, -0.9371809858553722, -0.3344363145343455, 0.028106042036613862],
        [-0.09921769636429248, 0.9371809858553722, -0.3344363145343455, 0.028106042036613862],
        [-0.09921769636429248, -0.9371809858553722, -0.3344363145343455, 0.028106042036613862],
        [0.09921769636429248, 0.3344363145343455, 0.9371809858553722, 0.028106042036613862],
        [-0.09921769636429248, 0.3344363145343455, 0.9371809858553722, 0.028106042036613862],
        [0.09921769636429248, -0.3344363145343455, 0.9371809858553722, 0.028106042036613862],
        [0.09921769636429248, 0.3344363145343455, -0.9371809858553722, 0.028106042036613862],
        [-0.09921769636429248, -0.3344363145343455, 0.9371809858553722, 0.028106042036613862],
        [0.09921769636429248, -0.3344363145343455, -0.9371809858553722, 0.028106042036613862],
        [-0.09921769636429248, 0.3344363145343455, -0.9371809858553722, 0.028106042036613862],
        [-0.09921769636429248, -0.3344363145343455, -0.9371809858553722, 0.028106042036613862],
        [0.9371809858553722, 0.09921769636429248, 0.3344363145343455, 0.028106042036613862],
        [-0.9371809858553722, 0.09921769636429248, 0.3344363145343455, 0.028106042036613862],
        [0.9371809858553722, -0.09921769636429248, 0.3344363145343455, 0.028106042036613862],
        [0.9371809858553722, 0.09921769636429248, -0.3344363145343455, 0.028106042036613862],
        [-0.9371809858553722, -0.09921769636429248, 0.3344363145343455, 0.028106042036613862],
        [0.9371809858553722, -0.09921769636429248, -0.3344363145343455, 0.028106042036613862],
        [-0.9371809858553722, 0.09921769636429248, -0.3344363145343455, 0.028106042036613862],
        [-0.9371809858553722, -0.09921769636429248, -0.3344363145343455, 0.028106042036613862],
        [0.3344363145343455, 0.09921769636429248, 0.9371809858553722, 0.028106042036613862],
        [-0.3344363145343455, 0.09921769636429248, 0.9371809858553722, 0.028106042036613862],
        [0.3344363145343455, -0.09921769636429248, 0.9371809858553722, 0.028106042036613862],
        [0.3344363145343455, 0.09921769636429248, -0.9371809858553722, 0.028106042036613862],
        [-0.3344363145343455, -0.09921769636429248, 0.9371809858553722, 0.028106042036613862],
        [0.3344363145343455, -0.09921769636429248, -0.9371809858553722, 0.028106042036613862],
        [-0.3344363145343455, 0.09921769636429248, -0.9371809858553722, 0.028106042036613862],
        [-0.3344363145343455, -0.09921769636429248, -0.9371809858553722, 0.028106042036613862],
    ]),
];
