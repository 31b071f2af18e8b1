import init, { analyze, lambda_field, test_ideal } from "../pkg/fthresh_demo.js";

const N = 96;
const $ = (id) => document.getElementById(id);

let witness = null;
let field = null;

function show(el, f) {
  el.classList.remove("err");
  try {
    el.textContent = f();
  } catch (e) {
    el.classList.add("err");
    el.textContent = String(e);
  }
}

function bounds() {
  return ["x0", "x1", "y0", "y1"].map((k) => Number($(k).value));
}

function colour(t) {
  const h = 240 - 240 * Math.min(t, 1);
  return `hsl(${h}, 70%, 55%)`;
}

function draw() {
  const canvas = $("field");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  try {
    field = JSON.parse(lambda_field($("problem").value, ...bounds(), N));
  } catch (e) {
    field = null;
    ctx.fillStyle = "#b00";
    ctx.fillText(String(e), 8, 20);
    return;
  }
  const cell = canvas.width / N;
  const max = Math.max(...field.flat().filter(Boolean).map((c) => c[0]), 1e-9);
  field.forEach((row, iy) =>
    row.forEach((c, ix) => {
      if (!c) return;
      ctx.fillStyle = colour(c[0] / max);
      ctx.fillRect(ix * cell, iy * cell, cell + 0.5, cell + 0.5);
      if (c[1]) {
        ctx.fillStyle = "rgba(255,255,255,0.35)";
        ctx.fillRect(ix * cell, iy * cell, cell + 0.5, cell + 0.5);
      }
    }),
  );
  if (witness && witness.length === 2) {
    const [x0, x1, y0, y1] = bounds();
    const px = ((witness[0] - x0) / (x1 - x0)) * canvas.width;
    const py = ((y1 - witness[1]) / (y1 - y0)) * canvas.height;
    ctx.strokeStyle = "#000";
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.arc(px, py, 5, 0, 2 * Math.PI);
    ctx.stroke();
  }
}

function hover(ev) {
  if (!field) return;
  const canvas = $("field");
  const ix = Math.floor((ev.offsetX / canvas.width) * N);
  const iy = Math.floor((ev.offsetY / canvas.height) * N);
  const [x0, x1, y0, y1] = bounds();
  const x = x0 + ((x1 - x0) * ix) / (N - 1);
  const y = y1 - ((y1 - y0) * iy) / (N - 1);
  const c = field[iy]?.[ix];
  const where = `u = (${x.toFixed(2)}, ${y.toFixed(2)})`;
  $("hover").textContent = c
    ? `${where}  λ = ${c[0].toFixed(4)}${c[1] ? "  in Q(J)" : ""}`
    : `${where}  outside the dual cone`;
}

function runAnalysis() {
  witness = null;
  show($("analysis"), () => {
    const r = JSON.parse(analyze($("problem").value, Number($("jumps").value)));
    witness = r.f_threshold.witness_approx;
    return JSON.stringify(r, null, 1);
  });
  draw();
}

await init();
$("problem").value = $("preset").value;
$("preset").addEventListener("change", () => {
  $("problem").value = $("preset").value;
  runAnalysis();
});
$("analyze").addEventListener("click", runAnalysis);
$("draw").addEventListener("click", draw);
$("field").addEventListener("mousemove", hover);
$("tau").addEventListener("click", () =>
  show($("tau-out"), () => JSON.stringify(JSON.parse(test_ideal($("problem").value, $("exponent").value)), null, 1)),
);
runAnalysis();
