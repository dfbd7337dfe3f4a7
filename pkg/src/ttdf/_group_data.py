"""Fixed pregenerated Schnorr groups, one per security level.

Searching for suitable moduli at the larger sizes takes minutes, so
the groups are generated once and pinned here; the loader re-checks
primality, subgroup order, and bit lengths before handing them out.
The toy group (order 11 inside Z_23*) exists for exhaustive tests.
"""

FIXED_GROUPS = {
    "toy": (11, 23, 2),
    "tiny": (  # order 192 bits, modulus 768 bits
        int("fe25cd64a56e08924bd6a26a0d2b519898d0473854744e2d", 16),
        int("f33fea908c3c1d9a75c79e9356f22a5c38739170b2539553d5535d5e32742691188ad138"
            "e43d61012e0884eb20b8cd8fe77d7d00dc9bcfa3ff7fa20ae2a830791455c1b545e81872"
            "f579af6e3f8acfac66528882b51692e8c7de553f3977afab", 16),
        int("9ae4f6fadbcaab7ea5239c80851f05119c06fbd1f59b4049bf0bd0672b157da0f10b1093"
            "70fe8b3f6ad45e2a3fea296307f009f4777b486ebde5c81dddbca5fc4cf6b25e8a037c74"
            "29307e3f8e83460353db7b6f01e606d4bac99b699c6809a6", 16),
    ),
    "128": (  # order 256 bits, modulus 3072 bits
        int("9f3d577b4fe9cbfae935e3fbc1063ee91c81992e82b5e34e68fbb11d8c830883", 16),
        int("880aa57fe514df566a50bc8f232415b9da7ae1995b3eeb2443b29769a085f6b3e6a269b7"
            "485ba87ac7e3194b87e7e4250ba723e16016c8013bdf2fe5fb80463390ca9ab3ff9acebd"
            "8652d6d7a3f19cb032f98066691398e58b91ea22487d0d43c3211200c4a7bcd0c395d520"
            "2e32dbb30b789df376215fb063876c0824ed1f149bee73646cc0d9e8e54d2db3540827b5"
            "d601721d458525c1d7d064fbaaa6c29cc539116747dd60064adfbda86696cb51708cafd7"
            "b7acffbadf73f0b02ac473e313edb8cb804087968d24c4a5fb363485d70ba26577afab37"
            "2eafcbb28a5a36acde69f00ea947b2aa88c2591c73ace0b4fda40a88f9d52c00f39a6c04"
            "4c7279d47fdb5fe8910a91c6e28c90383005be7c3fe39daa6850f9ca0a6dabb9b3e694f7"
            "64f9ca179206cadad57262bd11083af6727d51cb5f72145051b72f9c94c1a4fc1e0e7e12"
            "1199c2d2b6ba302880d6d92f10384d5b0c72849ecf2f002d6adfd6ae093c2e0e8b6a7db8"
            "80759fef15084d1922810f4effeb55cc528691b123715a5f", 16),
        int("45a79b3462e4204d00d15ed8c115f898806480e6f0fb4a5f18a40afbf031f71d9e9f7d51"
            "623e6628fc1c96d8924d001ff795f85f3f136e2c6b65c4a4061b05b2e89577f0a06b35ed"
            "f838ddb50b302731abe75b9938707447b0184b4d52a8ebf08e2d54907573b278e6304eb7"
            "6aba3ff5e8043821260a1d91124cf337bb6361b2aad4b6dee31459745bf02b40eb621988"
            "22a16d4a1dfdf313542ce542e26a9c6353acf8ca58f4421fab47eb8f61c4b10a30e6725e"
            "1f1d2f7fb518b793a1124aabf25f36b623d9e1c8b8feaa2ba6050594a1e9da605cc5220c"
            "77a126097b99af5e21fe0c2a37c6c887728f6e3b5f8a2fc3c005d5bfbf11e0bd6dd615a1"
            "e418915bc426175196efe6b1cfd4e0f945a02d98a815f7cebc555d6d49dc6a50c022221d"
            "1519ec8e906f0ca8bb6418d9490a5fb2b1fde7e4a1151f656735d7966e07ae37a725e46e"
            "322586174ff934bbe2eb480708f560d5cd2cf22c3453ce7dcb4efa7e5be3696d9fe5a019"
            "1802c06da813dfe3078d3bc0d4754421e79d1ceeb5301b38", 16),
    ),
    "256": (  # order 512 bits, modulus 7680 bits
        int("94d9fcad3889fdcfbf2b76e4ad20695a327b6b340914a15d694b5f63635a762a23f64ba0"
            "51cd2b1a4c01083107fe2243eb9306a981ec02d303dfbb9d7def6797", 16),
        int("84fe752223eb1a39f62777efa195c770cefb3b0e32db8a6bddc415535a4cf3c955b66899"
            "52dbf85bc2f95a6bbddb84dcd5ed7b331176353a04b3324334e1c8776dddac9b12e92e5a"
            "ea7b9af9b4a4718ca16ce3c67cd674424906caa5ea98cdefcaf83f9ec37c41baf186df77"
            "88caeed47d65f171ee2b83cfb82616572afa6c5c4de7ec9c8b2aa10c117671a285a03141"
            "969bbf7242a7196d7d61df2eda2bed36fb6c510eda0aaab45ef36f538179c277a989b8fd"
            "c7ca5c28867393bc870cd9bfbd7beaecf4cf9783b69644f66361d736fcf7d343835dcbc0"
            "1c13463827381f3942530acca7ee8b793f5663411c254a47d8b16be1652e64f56cd019fc"
            "6330e96074b9deb690f1269e0c63dece48e49bd801ba5da12462b7d753831ce2d67f7791"
            "e6bbba695e6adbcc5d64941e7778fec66e6789c545d4ffa9dd600a0391f13179c1f4e780"
            "5a4dedf277110ce131a1e7e028455e28530407071727cad3d94699a9c7fbac0516b830fe"
            "f85c0adcd7cdb822ac62d4597ecb8439e37102c7ebbf0a9def5ebf9186ca6c9e3799bed4"
            "22e2ca33d3a85c021a5fc5d3948fda0289fdef31a9f411688f27dbbdd197dc85cb089d8c"
            "cf208b885b38f3d720577847360332015ca886da95f7d62b016f3b60b635c3231a08d6df"
            "09d2aee521948195776bcf45aec221ffdbe68fa0a92a7ce3f64ca1360add72ad97844447"
            "6c0746e931414498aa11246b3c10c3ec6b9332270b25ccdfcd3cb9e7d0a3b762b19a87ab"
            "076c89d27816c6a9b7b40882b038639a97c882a66964f57b0c9719041a5ca8db6ac9b558"
            "73aeb27ed8658e68794578120299188a4d1c5d167e23fb3c9cf80505863075b52cf7ef9f"
            "5521911d5b4500b5f242807fa52ca618c728bd419f42c4dba4bd715b6f33e969e717b2c8"
            "7fd9910e31533a1fbec32145435a4641027401f711d455f256061e2c9ad2991fcefc6710"
            "6e657e24ec797220be354465952f0a4ac4b828a6b7f1e9ae58c82e2bc4778fc545bdaf3a"
            "d055a4a2a19df0b05f7f44bd39d3dbcd20b204a13fa2d0f6d646be1c5d5dcf3a86a57e2d"
            "8b40c9d881b60e49392c2309c196268b6ea62612612d322dc0ffc5fafb150f9147ed8cc6"
            "59835983241bcdc0cd109a90de4336b11bdc5d62d07f712f03d117af501bf71b536111c4"
            "ad3f8905c1bffe3c79abe57afeda0d0b175462cfee1b2ca68579686401d6d7207ecf1adc"
            "27d12449ff8c52b476c21988f1518976a8bae13f83814257bb9df72ec109354a6618c1d0"
            "983e9f51f4d821e57583315634496c798e581fc9b22ec1bb4c28a66d563c67742ce89410"
            "2f798f365be9129783a5f8e4da405f20f724b6224b919199", 16),
        int("1dd590dc8625ed63cb53a10e486e02e280f4fb641a29fb276d575b728387452404bc0212"
            "516b450159d86bcb5d8e3b2ae4cddc65b2db3ce0e9fec83e20ee8e897eeabecc285c4598"
            "1945b61837276bf3a3d60ec62ed93a54d15e040d03b895b6cd43099dfafaaf3d1c43a30f"
            "d17a9ceea7e2d9e2e9b4a74ca4e6ea2888f97ce7c6a3f0f622c89af43b38e9c7b25a0031"
            "6eddc4dc84bf9655dff7996cec283213a7ff5785e58da6c0dcdec2c60cb7b86c4d257540"
            "b3f52a604b5a71699ea1563c9be61d71eeb759eba7234d10770f258eac35753641789eae"
            "ce0f3661bd57b6abbf2d583ac29dd63b2fb19a14bad44e726aa16079b3fd7a7d288811e8"
            "a9270351198214fb8dd7359d1174cf4a373d64840480a346eaa7a0c5370ed99655a9969c"
            "2407eece5a95c42bfcb9580df4a3a0f58c5357c4b7f15cb1ca0612326079f83647eda053"
            "12acae3158340e0300f4f338e47d5f4e161a2095e356cac8ec326f34741df3fa97a296f3"
            "24ba47aea95482731acebee81e5bef2a58f102366c368b7095158e234d2f868a4cc2732a"
            "6750872f11645b3bdde9c023ecec8e7c37146b4e0845801d7fa54a093fe2b4beacc234f1"
            "7428fd1d1b2df6c6484bffc7ce901ce2e908a3e034df8edff50fdf43824fedec833de096"
            "f858ef507655a75144b5d79538181fe8a9b36119b01d1693d47adb72914e0a173857fba5"
            "fb3f8eda66d5bfc8364e68c9138171975a9ef4b89f6cb83bcf65ca03f6dd163f6204b23b"
            "7de59d729808df6fcf9548e96782a09b1a281ef1d3a70478ebf72c5372c8f2975ead9480"
            "390e7608cb31a03a4d7cf929a7e4a0d31c03c2f4730d40dcb84dffbb95d69613e0fa9af9"
            "62fe4e6ec663c26779141461d4400ad91d3291c2e021168a4faa5372354f2966308da1a4"
            "35e60d9a01a3d99dae3840279a339fa2db7ed8e7ddf9ca55ea906f9e0373726408cb3a51"
            "76280882dc4ca111af1b61eef677648464ef955935578aa2b8aa707b0fe85fcebea17582"
            "1ad4e255aef330445ba67136b36f892f4475904b1fbbb1145954ca4aea798174333c2ee8"
            "31a1148bbe25ff44316781a47d4a74b80a06890fb20599c3f918083c6b11f7963f952d1b"
            "8649f98343b20ca4dc755b91ef2042511ecec4c9a86129433d45ba6ea169a1ac973fa19d"
            "7d998f8e7bba2ad4a561cfcf13964fec18c84fc210c828a29ea2107d5c87cccef03e5e89"
            "6972818a185fea41abd6a140ebe13af00298013c3157f75f9a50d802276c3652240fac12"
            "4881d2ba625a28b9abbfcedc6ef519693998c64366f748f676dc57931e82ba5a81c68fd8"
            "5fc68ed73fe1260f50122fd01c7ab39aecbe4d0a77eb2d93", 16),
    ),
    "512": (  # order 1024 bits, modulus 15360 bits
        int("eff77100e461e09ca34bbe05e36181addd0515d16ccb99f0aeab8ceb3035c12031c30b7d"
            "fab4cd4cab1ca56f1ad912638b9a81fdbcaee19dc1aa323aee16722f8b8567c4798b1c05"
            "0aa672c15f3dea6ea33b3f63e36a9ede31f6974ea2d6b7c0d58f3dac57bacf99daeaa65b"
            "aee3ed35701e7ad2d1d4036a55f7f986cc6966a1", 16),
        int("ad791da1f9d7c62393d596bc54679df30d25142f5dc15a7c0ef0ac3c8613091012d5292d"
            "52c4cd7db97eb4a1577a7f607cab1034a23c9824cf7320573a04124c04bed0f9af5939b2"
            "e14d47db2d58717b09f5e591db6dcc12fbf423b50895a58222b592789bc61d963671ff00"
            "73e97660a871a67cb29379133969fd1a0b694bb65bfd22139503cbe6b701cff5c97e5ccd"
            "004799bd171baa8d26a775a43de048be316d57e4d4925777930d3b30c2164bde894e5796"
            "254c38541dc11f5ea2919f1b1aae77319a1271056e8199aefe1a92cfa01d10eb0acd1f19"
            "4618c05d4f8f14919ec58d6cd3b3beea583f5d75a1ee50dd973e0549e5f9665f91b337e1"
            "7602730cbdb082dd4e2d316d563767170a13a2fef00364a3f809df45ff8e355c33cc4b30"
            "cde7a92e7088c77d606deb8294b664e300190d68971002ffbc51d2734c14b784359e8bfd"
            "7002dd36194a6df6f94c7c4e405de1b6308e1de0c98b31082a0240184319961497c4d80e"
            "c3269fb6f9266f9f804d51c1435d72fc0856b23bcbde085073d2b680fc90b77f72020c78"
            "b3b229e0150445469a9daae2c0dd1821d8ad04fb00f0622e919320bdbf9b1decc635fa2f"
            "037f37d61f722ece698d180f7a7e1036ce53d505809370d2ad190f2f48543d4c1aab462e"
            "572a497264c29f88c9eda8256f2bbfc0eedfccd551eae4822a9a9dc36315000ba1b70d61"
            "872698f774cce6ce40a196532e61317101451daa3f74a40b5b9f1b502a92d98b3e7a0220"
            "7bdf16d5f8e978704e37e9779003b77a043dc236a3f773938981b443cb82ab6b790da1e9"
            "ac4f11729c3abed851d3a5e6a06b6b584310d51ed585570750febfd7ef28345af6ada746"
            "743ab24096c5a612a34ecd623400cefe935e249141190f8f582425e9d3d7286b9e850815"
            "b6579ef359893cf84cfe6e0658361c80030f2820ee731aef0c799d4c96e286dcf2fb0236"
            "2f8f4af94448065696ade7d5bc2a0de13f710f51bbef823e3cfec0212f4b3375ea84d275"
            "ba8bd1d01b74a67e354287c83943409f7f49201d8698fb015aac42e9a5251ca80f0e07c7"
            "238fda5c4322e61a3413a7332741092eb7ed4eaae00aa6ff9fb1b21f4e2ca66dc56ddfb7"
            "ba24ad3bd09ffc5d7b4d7d37e3c6e16779d432635bb2cf0061491fce939ec363c9b9371e"
            "0eb8e3a6e7aa7a926714e49cdad5ef1f6c8f4dd3c44ed5001a0710062ec32591718d3d28"
            "87024e13ad6b9b2654f48d928c1d5fbd976c540c37f4f5894d2f08ce6a4e07933549c4a0"
            "c963e1a3f9b914de88701c0ea68d3414f8dbfbe479a4ff65bd1778c08bb4f7fb86f8cb82"
            "cd35b0116991e0cb5ab6f52e3c6cb865016395b497a12cf5fdadc2b6acfbbc778b9e9356"
            "d7f212c30499d959c3217b6c566f560591386f13dab90e7958f13719f4a940dbb52e48e0"
            "92ac3b1c1037b54c12a06567b11099b16413929e787478291b1ca304c418acb7e9eff957"
            "de34ecc71f9f61fb8776fb502c0c710c4621e23c49f612706d3ae9eeaa901ab438758f44"
            "fe093fc4e1b2b1b9adff7c5dc336289c5a03374172eec3ba63e43f82673059d44390043b"
            "3dc5fe356a7c927129ec697cb5230f928a44a116c9a8809ee2a25697eaffdc2ceaa56481"
            "892ae0f6a98cf106a1298c3444bf28ddc3711d7fd66314d70fc760cb2cd4f951f9fd39c9"
            "748fa5723e59de4be4eb1092f8b6e38e073b29540ef33ee142c4a7731f0c7cc6f6b0fbee"
            "8ae5fddaafac86956c4b26bb09c60d3689b9a3537c2c59b65683691ef97772a161674e48"
            "9f16b61f6255bd801c5c784ef32e9f6ac905e431ab2bbe8b30e6747d04b4adced3984d5c"
            "829e9bf8fdae0a7e325c1ba461346a88265204ff1d5e6d42d070c9e174b963fa1e9c55ec"
            "022c8f37df9e354549d859d5466b082baa19a21627f7441e9133b59d9e74c64615b0b95d"
            "26cdf0d40f8649ae20eca431f2d75f67324389611f03ee7da1877d7d1ba37f64c169f5f0"
            "e9ddf9c9d5d4c2d962f3a283d58458d90fe622162907aefb10e4c546822182206af847d5"
            "658f53a94db749f08f30b33e7c02a8f133df4f4f0d188834530050cda7d949807df93faf"
            "02cb82168ec86f5ece29dc94b92b5078b5db3da7a64989c4501036f2d2832a5d9784446e"
            "ed17952a2764591ee0e84ac1e52cdf42a3009f1547974488d9506308cd03d894559abd56"
            "061f68f2fd030651ad08efa2c7ceb17a7af25d4b2051f4f1d212f7bd22a93b7a5011a8f6"
            "babb410a72538ca1935ccc57331fb291ae82cc12d2b8ed7817d88b16dda6e02a836d8efc"
            "3535bda2120e6365383996dcc41e1136d4643fb95c19d8142d0f31535df084872b4032ea"
            "2291f55df7ede47735bc5f01acaa51b6d2f0a9632f5acea7b5139e55ff0b0607c8dadcbb"
            "94aac275a395ed384216f76ea8aad6512b07051eac93ae536f558edec298e76afcd0abf9"
            "2c08cd184507b102799cf9428d952237692abd01d94f3b5d3e73f5be04db089b003af1aa"
            "81b74cc5b5a6ab6030590013c21cc476b1bd1ff87968caa16a5ee3eadae46eb4422fb8fd"
            "92b92a96ad737c98f60a35982a76257e5fbe8c5b269c98478012614d057cd3e908b6c202"
            "168e0fc48a5b47d6dacd893400a3bb65b3e69ac4316a35393fbd0db519efc6057e9d79a9"
            "b8f504f340823073767ac123119f7ebefcb5b92ae25da7a6b0ea90141e1d3f9a7abd699b"
            "3cdd7c38c50ba90182accc5b", 16),
        int("47b7985350374b9a5919d9730b3d53771511d6ee079c97cb76153fd52e47bf42afc55be4"
            "bed686e4c8aad5a3b054ee3d594cd086f390e0b11b4fbd6f5001fb3516cf84cf28fe4c58"
            "e1472c8c040d3067a41f976ad1bff5d2f13552f55d7e3b7cf0215156562cba2ace6e72b5"
            "eb01715c8bae89813b1968362352490a847b4aa7197ffa50f9d06118500049895d931ed0"
            "c035be6d9bc7136802e49f24e6a6b963f4361c43fbf5809c6116d7aa4bfdff914a377fdb"
            "08ea75c1945dcb1e6b75931d04a513c0df55ea0bce4bc141fc569feb2baf3365357b855e"
            "9e3fe9ed245411eebef05bde899701af7129bc709354faef8415c9bce4993d0714c45d0e"
            "ddf4e042c7f3f2ad4b0981ab60ffa46f04c7813b880092f91f014f7802c5a823b9797ab0"
            "f23e7d5c39cd8e0ab052236dc8203ebbeccaef8cc9da09a44380893dfd23327bb831d835"
            "f322746ab54bc53f673fae7a86cde19c23e8c192119b2d85aff412d1e780eb5da3b126c7"
            "0d0736a753401829a17be2192255916dc64787dea0c047bf76132de26e80b7db5658856d"
            "047aee57b2f107eccc10f19838a19a39dbb2ad6ebd95c4b0d8c63558e08f5b487f325d92"
            "af4f0c5208f436e6f465546c00969d0626441a572a022b5e977e436cd3b395c061f1b441"
            "aeb8998722cf69bcad9029c876dffa00595bd20a397a6f0088dc57a7e4decab9a6f55434"
            "94ddcf0e1528059d44d18550670f1cb3852db4742f28a59b32bd553d9e75f9f9a8ad5f12"
            "f7916870ee5b3ceb02640f87306c02fb54b1c6be614e9457d17e8010f1365f5b7d39c909"
            "eaea89b08e942e873c684605e0655bb64b284595c855306a176584930ba4df01854aa562"
            "0a9159610a688167be8cd791d903b10a5dec676a26ee50880bdfda7d36202fd5edca0261"
            "36c87384010a06644c443e7c5f261bc94797acf5f3331a09701ace71394345a018f0d917"
            "757b8291074826f4914a25e087529a0b9612958b3970dcd9ec781220e3e85d3684550c30"
            "8bf1fa472ad00e5fde1ae9152e453ae399c4bf9e8e900f3817e14a53ce1a0aef22f7653c"
            "d3d7e3aed225c3d9eb2fe2be2b790ff37342a41d4fb557ff4aa33e2bda321295e603f845"
            "95e35b0d23759c49c72a08a7573aab9db09ca756350c844860dbbd99c2bf5ef8f4c55b02"
            "031bad1da61310b791dc6e70316e5645a8bc367ca8238a69a5cab40da15d62c57bccc7ad"
            "e107265bc44646eed8ba3ce7049cd58d95cad3309e5c78f5a54113832ae5692862343f93"
            "2d1d9c77c0cc586e269277a76982b1d7e1622255abae0b6984d35ac89a467617c9bdac1d"
            "b6a2b71ce264c953e1dd0f8714dca833adf578c4e2ff31a3be3824c6e32698060cea9f6c"
            "62913fc9e8fe57105f69f5942c1122a72ff96bfce97dbd7a39e82744136fed3fe244f467"
            "f647ea3a8a08d12ab0e39ec2161cdb35dd8327f9147e892bca3f17d731e96664f8fab01a"
            "a51ed9e1db4a65cbb04a52423a06be08e303f43df708bbfac24c6435b1dfbd68129cdea3"
            "be34b1733fa2a9296c15527d62901f8372a24f5f9cde3925772947e24e7b311b3f7806ce"
            "cf1b3f8a9812bf42544c23e26473deb7fb4ea4b14ad513afe260cc279a2d2845cf26a627"
            "88a7423db3a320aa140ea9e03c70f53b6a924190972484b454fa0fa6dd09c59112fe9060"
            "d786de0074397a37c8a3ad2e19cc64eeeb06c0bb2462e067bde6c8b652555a97bfd4bdf4"
            "99a8eed08b7cbd93e5536ad2b9b2affc4a7ca1d989b5f146556736abe055b31903b5d2fe"
            "71956f85d6aa207454dbe445e9709db93af6df6f951736dbf13065781857e3f73f80b797"
            "60926165c4dda53da68cfbae87dbc90622839c7aac89b72887590aa3660e3394eecdc411"
            "3845566e8427b18824181d0602e92bf740ac9a07769b0e7c11b791a064dfc3debfb3caad"
            "4934b46ec8b09697c9ad92dec5caa2c01a73d6bd6f9df2d716f8874ed521160947404f5c"
            "27aef726ec63d55fa74083fb3234381ec2d57e07508caecb7c6e31204683e5d30169dfdf"
            "ecbd59f38cd0f2178ae2873e97455e8289ceecfd4c6541c0781e5bd32b26a0fb30aa8f7c"
            "92125590dbe281fbdcd8f69cea6568d92919e4504476f5b9bff1f38ccd0f6a3d190b7ba8"
            "5a7463c76e0d777dca5f2d5e5c845e6dbc41765423f8898ec52f39beb650604f6b056d0f"
            "854a4a98ea7c7fe08db4959add51e4d072382c07e66a2e07c55db079a39555b74f2ed322"
            "991d549d609b598c6381446f74bf495acaf94ce33bb781e1be0a8eeca9b2eac51e505936"
            "ad591ee11a2ed69789795cbc39c4fb428c65a29a6ffb235f745efc2b959475105eee139e"
            "7c898e2cf52e68542a72485a07e3241b3ab847c0e0fe225cb691f1917cf6b05b96e4ff91"
            "09bc4d9567a9b4a5167005257100388ec9a4700d461683bbf1edc9388bf305ce27df3585"
            "e0349f6886af0d82e7b122fdcdb466861999a00d7402927242d02641fcd3f2d8087da819"
            "1d28848b7bf80aa97060116f69dce037be584abb2ddadb10232e934ab48284499cd07229"
            "4ab75ce5e9e72af512b47bb8b6eb6956e0b91502a412c893661c150372ad33a9a5e3e82b"
            "d1257fd49c496000a028328d19966523a40ed0355a429a6b4ff8bfe06c88048496e453c5"
            "6264938b73ca5008066a6939ff201fd79fb56459d35fddfcd7a3813e2166eecc2809332b"
            "d1b8bf53cc3683da255649c2", 16),
    ),
}
