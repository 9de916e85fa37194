"""Poseidon permutation parameters; generated file, do not edit.

Regenerate with tools/gen_poseidon_params.py.  Width t=3 (rate 2,
capacity 1), S-box x^5, 8 full + 57 partial rounds: the round counts
widely deployed for 128-bit security at this width over ~254-bit
primes.  The field is the scalar field of the BN254 pairing curve.
Round constants are SHA256-derived (domain string below); the MDS
matrix is the Cauchy matrix 1/(i+j+t).
"""

P_SNARK = 21888242871839275222246405745257275088548364400416034343698204186575808495617
WIDTH = 3
ALPHA = 5
FULL_ROUNDS = 8
PARTIAL_ROUNDS = 57
DOMAIN = b'tapswap/poseidon/bn254-scalar/t3/alpha5/RF8/RP57/v1'

ROUND_CONSTANTS = [
    18085608637912466487025478111124972373769205811350706922823341147336197505701,
    17048183495697876751824625690104868524240064954696898297071376631208154747996,
    3184917524468528814426732310398510639165730397811266624115993582948063278515,
    19572280492873078809670347584780545686909164283657141726207924475069001338930,
    2183813817737267765840673471235849292425260446022622827505155735661119493265,
    1225172758546191539909064380925207761110896311650211834505099182370591857926,
    4405800760147791792275181861244205726652678235092279595231123354054616602272,
    3303407844938887566878559745085197469878897351527683762502049603870666791622,
    14416048912268955588461490161622388119809327576252709775583179365212999551969,
    3085060220994061058809927499269167037609659144546117731356288815051691915997,
    16581633301821480376330920043596753209283847177316234496557330528654187972919,
    6232569352187217858466373187237832844760319535773729517947791118045339009061,
    20240529483021512551562265031071622505836730520601756967227348862552480622138,
    1636560827206619618468140051534770109531009862765694359656334332439319224731,
    14256197483182681767638215048890934212922570833272205436091488175621936857439,
    15750119859140029490257683395217875635695482252165878663838662486000176526853,
    21459660020066747376799451109241095793591447477487929036869940070569872586061,
    18777617411553720005189578878692652323317574057187324782725369788964788127147,
    18296373411393354512645069765927108472586942784037647915056813921807032484352,
    11287869224925053445808772687032857813670437396529622855517291223036651584249,
    3081691085370583571891035136091640747409133548266557739368693846238113304670,
    14542349682941824000092212690409314249544487411726450174025347588486343987857,
    6004926315463361839961150926724477573813838328466169427250852851009615483825,
    6932098953625933873514603713091654128146643192967693955386928062243239618695,
    20279711543564192113473327220422789253999488342938802057036047990069187484470,
    14305607918319780620501526585067322518420657609504697094335884659197041850952,
    1200808329877854402290396736702401017090969437506302950853122204325569941670,
    8747913857483231969355858213199837797257608150015297149370726215921937569129,
    17967793337815949158964186690884427388026733363858676733398629350348702454879,
    2234696035440171874314789146015801174500098847152022454753091799637971145785,
    4615287123889742702365467967725230895366719600043961845634511998772913792326,
    13715015321395842505250201845764209358476888647018000287992909478823454156836,
    7542273517533253486141081692142782633324442605179559848836498798025123228667,
    19404210789481705552166145562435350954557788738775975387189483212573544814278,
    20334908713520049544027884713617739064222923927700840239885296625697985212894,
    3920132443861791708751874496898607851536837564979179859546856116569774132561,
    13335246465930467282765042703796800755070949235298709481819999590667702264532,
    20243156403397917975973767756555126895008170527478982812679050384929508750365,
    5938306259467122147689058579717767956688560180190511193048462678342010018435,
    15103348166085045036064556823907719025497588596133840802731007959467857649272,
    18112839352202371327223733392674588155249091359761531646143682034063866920896,
    10777011187854796320927511497751390628086003491872383321830385625132201751641,
    20374247689854239932653969660293985243159761505520166473526384566917598636614,
    12051549226370351571140011276484375265390427345882929336439497902631380440959,
    14659875136789256472081095843120533788959269916931557287020684213160600549994,
    7761783298915286336669689189027474418819776842505840601343233688606755767523,
    2760208055513080728725108601636118821012825811681864524762167313283106694553,
    16948042948677098634619577807654260392872448501876090133891692805235910818013,
    9257247135218124746762613987836680890462890251540791862916437355079643041538,
    12139970820484295363977183323202390868077155297787449886558672200082672980667,
    5725670265161957159027299186391746637815870292343951443338900908700689037596,
    16645747491500077839322489605879688711108367500626381949507649506036380087770,
    17866373496591026083107987654264518500600110272204806735013534024881090517203,
    9622907783198849266738333871522758560777552193521701428205620415849952451532,
    8393597573690121694346409967057650315785961667929975199985286849743716214121,
    9460496485902091281943224387312441252184203399279298467243195857079079439139,
    13407430131243973901364066559924159176220277009402032554276124166737560846326,
    10860158726518175266967571821481614015922856618085083417532789692454037673425,
    12475009793462636279185164809359459979198661472741876399796974097395166775033,
    14721202170883313398325251838243938600993895962279635756882236012049395070919,
    17080832439171903680399804107900701885844114007246119296504142247504309258671,
    4228238150420229658906412642070985516335895731771280343760948429427556117899,
    16939371204421229696426716299491679453189801711232149831911768159088111497355,
    9010462316024123069459143012750534169906300789961205027024067921703534671368,
    8606572602852990279862486663629584437380036311008018027857985807546488647444,
    17682825083913943474376224361486159540692175179082865798718120760392573237478,
    14705409054066342531099204530428720200540118051343868686346407866738194908366,
    11312912477357110352164103834873282286452384754614568731271571445582182806739,
    875867988843286820906262915580608340266969339739875593105908333865053835590,
    15720614588434504867983166162185271178603660157558757831343144296985695844934,
    16907665028920662252288712875719447220612089346336063666096959107298792969259,
    11828393626724314241772873326051262530692043401753282420125850649337558963992,
    1943513983634946983125192894051456697021551131424183707355334992878645475341,
    19836143152309970709034596121710723703444178017901055039805577020677522979526,
    1437219373052651019311624710909537744908253984824883418001364712523819406944,
    20571191266599176566727351296361178003461582973309364631112168984962305167691,
    7523084198364732927385248593713549924588049982672415936512836706801466686598,
    3973716593966849036835720139690075397562860385782060413475940009014936820146,
    14887599048305845465377910880811926811572002531942709166608957076999570992484,
    17427029214422421545070492257648605204290307746252088404270068196752685347845,
    8563022027774497671894510859264749811243728245819054943818496558894359824758,
    807622039389682910407817262644165505745830714058473614774918370993918443750,
    3258005317745864049705809182997796348275816952626333812970453730923681775238,
    9852294619748940464505366697827059753630568790388173675152622811086505644555,
    18192394673595545029450695716538985526482270015644781939271552955987634343440,
    12840009053704586612516822608473916950711166165697943506007469383788525233915,
    9558646671929112100841040511599280165677632974853507150348096331762970213809,
    16725568461916872321579919748002297937068368345010849191120433678794629192832,
    9250235310492941742303191268139643638683627912315455319592834995431019642682,
    14209864246074112938277072600808646798298809694628688980956864484395553480594,
    9819798952337182418289445217071736160589095954916481183955761081004275016330,
    17027712627548148624781122255482840364850713245391277735402022908115475572274,
    5900183245687032180332367824232696690885628888778759503035766432097916031215,
    4035806086320622962121126505623563760205788550293712075371427063915576107417,
    5276089856676333527065117204155218656089649719057466064981978898261071999527,
    6750376119713063100417117281696095498828517790285698494720795290474226183813,
    9101871020366911873299906181162927369166798487978547431900295535651694484730,
    12655329618651139007793141694697417683787488768800941406453563019370251741806,
    12298704466597452082637675495171451009430540230270504100089803030092818396273,
    10441498794396993618038323650931885948049201111588982855074291869179616331737,
    18244945314681657014287201303695907741335162016135167934820685634843987138984,
    9059210701305005649126684557207291344245098990020781397268634201577186810816,
    12645682859989663921381088363828508377396953315265458396845828341202186177705,
    21503297655279975114035627549633277206637703781156136454706691043830202233911,
    17136246666075457723377042231012389767274597959221989121202822713283561015444,
    173921538395100455988001865224446846194925028839536172336666392697860246281,
    13502403869666545566931337953518972704297723103354845965829838558772194359124,
    20222162418807236742850480159315135713920499102976206664456641973608952754473,
    11786869561984835225106356242517427297741231333221892860523023296066259701835,
    20582003521450437658915221749264257520857326930997598349282679546757443114711,
    6927873162539074581622497833056203634036197783359635959409417054605530073467,
    12354881644715977214504638883567272142705728709613609177122260545801180745411,
    535223169079204833128593181822938367474994564147050268732802817337671967530,
    3773921855475088340305221363107816485125958411923141016652069479175750871616,
    292646899882974041284716225378767495642282625366864864642387626733887408939,
    5966289758459878119562962795697537266178852316045955179886380043917104544836,
    19706943606463982298609938204561052702340587570398110935748655173569867768901,
    21009766137103990512306471535801377540240148287797808111478917810756249768652,
    9060929645505019980592085443184953793177230346980621499160255024234548043289,
    5557729784355631729067906060259770330682916909345276301673693549255948886503,
    2799856348852011401074851062489769484260433700402268030503155593602762219379,
    15238751652452084417292975964947266820079394351861637743576073879410726006854,
    1960846267461223255253214023377074310892317999221937682212086312230395513162,
    11630649952992928194419203731366438012572565685027075051384469321577390786688,
    13041670772544440729819941215959716640851389573087917985473781596103228842170,
    10845339220728435581547357928725029494520374072824968265633627724199967575435,
    8860348717583325743655007863761463170597767148327991278072080068212834813385,
    16533785319393786818799512987624096767113281643255221707088557069433839825915,
    17135015432750600842688797759363602492948022372236759946858532423310103595483,
    15139663341003475599716458145454184769466363083324863794651457279647925971457,
    9189242818565496781083415501655324061952220861711905298300190732463818623445,
    18526775914727035865417797378866228649208416066447486829985034445781001174042,
    15139111562998152770673499601752161474853064042817937946205571879572481330902,
    8712412905486857495172453845962934221941188361290421516256474172066177988699,
    17091728645386779042013785499598153330573195209015971240597046641811674787230,
    14773608263508638054684781091490303152708507246477725126586145198498545242172,
    12314768601668702049278094243280011828781606212379972689459704875915974619292,
    116904524447097669728313436645591849508975455168959852005204715721727718980,
    16005336284234137222071672950506657949299876739195255532712834108959867902831,
    17000821889456717169291424812508740854842810175925451357926812101249451941597,
    18694628885032175324157059697047340381278804094676139806303324519996359381083,
    445132776922820837783237675246969585624992765160226317192448575716361709660,
    16560021348340438878804916355279987464205189550943546963635039578236386715820,
    10350687780168474675176701259596261366802211282774849449834330949989351419703,
    21704844792724099054529701534993431925780803213562103492803901121846553245855,
    16924685903765146829518881509932965956976594735577015281527264674421732579800,
    21043928153131260810986758790540163202311040105441793080641810715604777655221,
    5211777430667864109247229305012487913696596972566855019429737081684187083183,
    17812297079881230711346376596330231868488663791356444858684082610384737444144,
    14464829600470636156328612967154047604246650399775375442241930512862974053602,
    1659804978603709940884537930324369148263841539640448503748066707465481998059,
    21236627009455219717419338033964543418709001370267474953318832370730599329817,
    13622544131935585661945659456048350787166047609894948827163237664380697826576,
    13250869831567798002629445445873961201085082118460584075644480426500195033263,
    2188506634015038059010907703442035985124701763595457357463476271274195252452,
    11297288689840168135919465249479457178806586757150502350184391948115070383818,
    14139559097656667456454641544491873152557480675411566172505013576413873416931,
    14358831475165409743502103567430368829179627841341419011346395525154970031903,
    20173427137449919215602016976854999456642230892201690361617070145254824497176,
    17780814032899281925722259251560262637170627695843921198899603751668446223512,
    17026898024653849306946564839222884775091059442870460035535567993986586566646,
    20244950329720994552796297166141157334767024805330686646458644719150276762085,
    18012170851131577219500217269994915644900810041059513420908230336312020752243,
    17104865465910653838060591938122902504404888553295314318749231949327006230095,
    9416128195519479491821135739556617148420427041139168818440063063534384683690,
    3834258687206779875371541667525359875339550865245488392628962307575711526456,
    2175487314125768039901945985843085942332443701137942729097748369317003525079,
    19918253722536662138382747015262134287920266520690117540017190120066022197754,
    3532786423677917087421873046499321400296409827831199207975687714881669301784,
    13923487371685344943114526940474277975222934659370767146281330310747412904278,
    19765948374864926029450612570786526577544552565171740324916512395734077699564,
    20837208160210492034569605916266574532736832215450862889062291695654419142686,
    13809116760201244079694347904436534975526606861293165723422003796283179506705,
    21246324468413739801553317385405280077548333246473379947093509295290594148620,
    120705464891887173443194251188866571737754365886706680212768527048661228521,
    6002454347182088021697919134239261184842044336824192250580061572492532581334,
    14578958093190366869535696216779345384089400863866220255013284563153073368860,
    10453924146488705926002719584876751987051072649139173825495368538314992722257,
    863980500088239588943208692296964229947335292668856349109383056249611438469,
    339637935890098033312453913392436123160143109473629623447997916703016406997,
    20092072554741635950813918893424920134288932441959686616150879475684449693317,
    3198826439318196495142176210814714090862896245370564380174163169582072656572,
    11745476432584152595022089790076693266043869068311662552589617057586304945349,
    16370451129997866200926792561259145942561428504041435972555461263252384266415,
    5798795990767786235469569197359383505765786853796005056568743469526398490562,
    17180929773746635645464569614273505154612942373396560365174118554287921068469,
    2137656844645086515050774903055068216526999883785689865713598130118212826212,
    16264029551521275361954893747902821909229793807050384028538530952764915362942,
    3977902701944020513095082289690403001334380249963238552942824753696624716673,
    8934972673256461782135485513600398891927321095736938565703269757921149627366,
    20750168202394793624786178846976873019655112429568985744361937523339004550251,
    8576047394117929432395902340627915249560110964274073856298755068748730504814,
    4791386370280992512698428517049286161498786361412066516623665029364229799767,
    513582686817357715211644447656154669651494050844156919644447171988634150192,
    17411090596839325578562306348686913413328308310954499650874317845989548075803,
]

MDS = [
    [14592161914559516814830937163504850059032242933610689562465469457717205663745,
     16416182153879456416684804308942956316411273300312025757773653139931856371713,
     8755297148735710088898562298102910035419345760166413737479281674630323398247],
    [16416182153879456416684804308942956316411273300312025757773653139931856371713,
     8755297148735710088898562298102910035419345760166413737479281674630323398247,
     18240202393199396018538671454381062573790303667013361953081836822146507079681],
    [8755297148735710088898562298102910035419345760166413737479281674630323398247,
     18240202393199396018538671454381062573790303667013361953081836822146507079681,
     3126891838834182174606629392179610726935480628630862049099743455225115499374],
]
